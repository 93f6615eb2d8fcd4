"""Brute-force ground truth: equivalence classes of words of a fixed length.

Every word of length ``k`` is closed under the defining relations, applied in
both directions at every position, by breadth-first search.  The classes are
the monoid elements of length ``k``; the lexicographic maximum of a fully
explored class (with ``a_1 < a_2 < ...``) is its lex-representative.  No
rewriting system or normal form is involved, so the counts are independent of
the table recurrences and series inversions they check.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from itertools import accumulate, product

from .presentations import Family, MonoidSpec, Word, build_presentation

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "GARSIDE_ORACLE_BUDGET"


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class WordClass:
    canonical: Word
    class_size: int
    length: int


def word_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def _rules(spec: MonoidSpec):
    # rewrite rules indexed by their first two letters
    index: dict[tuple[int, int], list[tuple[Word, Word]]] = {}
    for lhs, rhs in build_presentation(spec).relations:
        for pat, rep in ((lhs, rhs), (rhs, lhs)):
            index.setdefault(pat[:2], []).append((pat, rep))
    return index


def _neighbours(word: Word, index):
    for p in range(len(word) - 1):
        for pat, rep in index.get(word[p:p + 2], ()):
            end = p + len(pat)
            if word[p:end] == pat:
                new = word[:p] + rep + word[end:]
                if len(new) != len(word):  # pragma: no cover - presentations are homogeneous
                    raise AssertionError("rewrite changed the word length")
                yield new


def enumerate_classes(spec: MonoidSpec, k: int, budget: int | None = None) -> list[WordClass]:
    """One ``WordClass`` per element of length ``k``, in order of discovery."""
    if k < 0:
        raise ValueError("k must be >= 0")
    n = spec.rank
    cap = word_budget(budget)
    if n**k > cap:
        raise BudgetExceeded(f"{spec} at length {k} has {n**k} words, budget {cap}")
    index = _rules(spec)
    seen: dict[Word, int] = {}
    classes = []
    for seed in product(spec.atoms, repeat=k):
        if seed in seen:
            continue
        cid = len(classes)
        seen[seed] = cid
        best, size = seed, 1
        queue = deque([seed])
        while queue:
            w = queue.popleft()
            for v in _neighbours(w, index):
                if v not in seen:
                    seen[v] = cid
                    size += 1
                    if v > best:
                        best = v
                    queue.append(v)
        classes.append(WordClass(best, size, k))
    return classes


def count_by_first_letter(spec: MonoidSpec, k: int, budget: int | None = None) -> list[int]:
    """``|L_k^(i)|`` for ``i = 1..n``; the empty word is counted under ``a_1``."""
    counts = [0] * spec.rank
    for c in enumerate_classes(spec, k, budget):
        counts[(c.canonical[0] if c.canonical else 1) - 1] += 1
    return counts


def partial_sums(spec: MonoidSpec, counts: list[int]) -> list[int]:
    """Table row from first-letter counts: ``m_{k,1..n+1}`` for types A and B,
    ``d_{k,1..n}`` for type D (which skips the column ``i = n-1``)."""
    m = list(accumulate(counts))
    if spec.family is Family.D:
        return m[: spec.rank - 2] + [m[-1], m[-1]]
    return m + [m[-1]]


def count_theta_term(k: int, budget: int | None = None) -> int:
    """Braids of length ``k`` in ``A_inf`` whose lex-representative starts with
    ``a_1``, counted in ``A_max(k, 1)`` where that number has stabilized."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1
    return count_by_first_letter(MonoidSpec(Family.A, k), k, budget)[0]
