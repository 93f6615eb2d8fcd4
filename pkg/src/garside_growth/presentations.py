"""Spherical Artin-Tits types, their presentations and parabolic lcm lengths.

Atoms are numbered from 1.  Diagram numbering:

* ``A_n``: path 1-2-...-n.
* ``B_n``: path 1-...-n, the edge (n-1, n) carries label 4.
* ``D_n``: path 1-...-(n-1) plus the edge (n-2, n); ``D2`` is two commuting
  atoms and ``D3`` is ``A3`` with a different numbering.
* ``E6``/``E7``/``E8``: Bourbaki numbering, 1-3-4-5-6(-7-8) with 2 attached to 4.
* ``F4``: 1-2, 2=3 (label 4), 3-4.
* ``H3``/``H4``: 1=2 (label 5), then a path 2-3(-4).
* ``I2(p)``: one edge 1-2 of label p (no edge when p = 2).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

Word = tuple[int, ...]


class SpecError(ValueError):
    """Raised for an unsupported or malformed monoid type."""


class ClassificationError(RuntimeError):
    """An induced subdiagram fell outside the shape catalog."""


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    D = "D"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    F4 = "F4"
    H3 = "H3"
    H4 = "H4"
    I2 = "I2"

    @property
    def fixed_rank(self) -> int | None:
        return _FIXED_RANK.get(self)


_FIXED_RANK = {
    Family.E6: 6,
    Family.E7: 7,
    Family.E8: 8,
    Family.F4: 4,
    Family.H3: 3,
    Family.H4: 4,
    Family.I2: 2,
}


@dataclass(frozen=True)
class MonoidSpec:
    """A spherical Artin-Tits type together with its number of atoms."""

    family: Family
    rank: int
    p: int | None = None

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if not isinstance(self.rank, int) or self.rank < 1:
            raise SpecError(f"rank must be a positive integer, got {self.rank!r}")
        fixed = family.fixed_rank
        if fixed is not None and self.rank != fixed:
            raise SpecError(f"{family.value} has rank {fixed}, got {self.rank}")
        if family is Family.D and self.rank < 2:
            raise SpecError("type D needs rank >= 2")
        if family is Family.I2:
            if self.p is None or self.p < 2:
                raise SpecError("I2(p) needs p >= 2")
        elif self.p is not None:
            raise SpecError(f"parameter p only applies to I2, not {family.value}")

    @property
    def atoms(self) -> range:
        return range(1, self.rank + 1)

    def __str__(self) -> str:
        if self.family is Family.I2:
            return f"I2({self.p})"
        if self.family in (Family.A, Family.B, Family.D):
            return f"{self.family.value}{self.rank}"
        return self.family.value


_SPEC_RE = re.compile(r"^\s*([A-Za-z])\s*(\d+)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def parse_spec(text: str) -> MonoidSpec:
    """Parse ``"A5"``, ``"b3"``, ``"E7"``, ``"I2(7)"`` and the like."""
    m = _SPEC_RE.match(text)
    if not m:
        raise SpecError(f"cannot parse monoid type {text!r}")
    letter, digits, p = m.group(1).upper(), int(m.group(2)), m.group(3)
    if letter in "ABD":
        if p is not None:
            raise SpecError(f"unexpected parameter in {text!r}")
        return MonoidSpec(Family(letter), digits)
    if letter == "I":
        if digits != 2 or p is None:
            raise SpecError(f"dihedral type must be written I2(p), got {text!r}")
        return MonoidSpec(Family.I2, 2, int(p))
    try:
        family = Family(f"{letter}{digits}")
    except ValueError:
        raise SpecError(f"unsupported monoid type {text!r}") from None
    if p is not None:
        raise SpecError(f"unexpected parameter in {text!r}")
    return MonoidSpec(family, digits)


@dataclass(frozen=True)
class CoxeterDiagram:
    """Edges map an ordered pair ``(i, j)``, ``i < j``, to a label >= 3."""

    rank: int
    edges: tuple[tuple[tuple[int, int], int], ...]

    def label(self, i: int, j: int) -> int:
        if i == j:
            return 1
        key = (min(i, j), max(i, j))
        return dict(self.edges).get(key, 2)

    def neighbours(self, i: int) -> list[int]:
        out = []
        for (a, b), _ in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return sorted(out)


def _path(n, labels=None):
    labels = labels or {}
    return {(i, i + 1): labels.get((i, i + 1), 3) for i in range(1, n)}


@lru_cache(maxsize=None)
def coxeter_diagram(spec: MonoidSpec) -> CoxeterDiagram:
    n, fam = spec.rank, spec.family
    if fam is Family.A:
        edges = _path(n)
    elif fam is Family.B:
        edges = _path(n, {(n - 1, n): 4})
    elif fam is Family.D:
        edges = _path(n - 1)
        if n >= 3:
            edges[(n - 2, n)] = 3
    elif fam in (Family.E6, Family.E7, Family.E8):
        edges = {(1, 3): 3, (2, 4): 3}
        edges.update({(i, i + 1): 3 for i in range(3, n)})
    elif fam is Family.F4:
        edges = {(1, 2): 3, (2, 3): 4, (3, 4): 3}
    elif fam in (Family.H3, Family.H4):
        edges = _path(n, {(1, 2): 5})
    elif fam is Family.I2:
        edges = {(1, 2): spec.p} if spec.p > 2 else {}
    else:  # pragma: no cover - Family is closed
        raise SpecError(f"unsupported family {fam}")
    return CoxeterDiagram(n, tuple(sorted(edges.items())))


def alternating_word(i: int, j: int, length: int) -> Word:
    return tuple(i if k % 2 == 0 else j for k in range(length))


@dataclass(frozen=True)
class Presentation:
    """Homogeneous monoid presentation on atoms ``1..atom_count``."""

    atom_count: int
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        for lhs, rhs in self.relations:
            if len(lhs) != len(rhs):
                raise ValueError(f"relation {lhs} = {rhs} is not homogeneous")
            if set(lhs) != set(rhs):
                raise ValueError(f"relation {lhs} = {rhs} changes the letter set")


def build_presentation(spec: MonoidSpec) -> Presentation:
    """One braid relation of length ``m_ij`` for every pair of atoms ``i < j``."""
    diagram = coxeter_diagram(spec)
    relations = []
    for i, j in combinations(spec.atoms, 2):
        m = diagram.label(i, j)
        relations.append((alternating_word(i, j, m), alternating_word(j, i, m)))
    return Presentation(spec.rank, tuple(relations))


# -- parabolic classification -------------------------------------------------

Component = tuple[str, int, "int | None"]


def positive_roots(family: str, rank: int, p: int | None = None) -> int:
    """Length of the lcm of all atoms of an irreducible spherical type."""
    if family == "A":
        return rank * (rank + 1) // 2
    if family == "B":
        return rank * rank
    if family == "D":
        return rank * (rank - 1)
    if family == "I2":
        return p
    fixed = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "H3": 15, "H4": 60}
    if family in fixed:
        return fixed[family]
    raise ClassificationError(f"no root count for {family}{rank}")


@dataclass(frozen=True)
class ParabolicInfo:
    subset: frozenset
    components: tuple[Component, ...]
    lcm_length: int


def _order_path(nodes, adj):
    ends = [v for v in nodes if len(adj[v]) == 1]
    path = [min(ends)]
    while len(path) < len(nodes):
        nxt = [w for w in adj[path[-1]] if w not in path]
        path.append(nxt[0])
    return path


def classify_component(nodes, diagram: CoxeterDiagram) -> Component:
    """Identify a connected induced subdiagram from the finite shape catalog."""
    nodes = sorted(nodes)
    size = len(nodes)
    if size == 1:
        return ("A", 1, None)
    node_set = set(nodes)
    adj = {v: [w for w in diagram.neighbours(v) if w in node_set] for v in nodes}
    n_edges = sum(len(a) for a in adj.values()) // 2
    if n_edges != size - 1:
        raise ClassificationError(f"induced diagram on {nodes} is not a tree")
    if size == 2:
        m = diagram.label(*nodes)
        if m == 3:
            return ("A", 2, None)
        if m == 4:
            return ("B", 2, None)
        return ("I2", 2, m)
    degrees = sorted(len(a) for a in adj.values())
    if degrees[-1] <= 2:
        path = _order_path(nodes, adj)
        labels = [diagram.label(a, b) for a, b in zip(path, path[1:])]
        odd = [(pos, m) for pos, m in enumerate(labels) if m != 3]
        if not odd:
            return ("A", size, None)
        if len(odd) == 1:
            pos, m = odd[0]
            at_end = pos in (0, len(labels) - 1)
            if m == 4 and at_end:
                return ("B", size, None)
            if m == 4 and size == 4:
                return ("F4", 4, None)
            if m == 5 and at_end and size in (3, 4):
                return (f"H{size}", size, None)
    elif degrees[-1] == 3 and degrees[-2] <= 2:
        if any(diagram.label(a, b) != 3 for a in nodes for b in adj[a]):
            raise ClassificationError(f"labelled branch on {nodes}")
        centre = next(v for v in nodes if len(adj[v]) == 3)
        arms = []
        for start in adj[centre]:
            length, prev, cur = 1, centre, start
            while len(adj[cur]) == 2:
                prev, cur = cur, next(w for w in adj[cur] if w != prev)
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return ("D", size, None)
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return (f"E{size}", size, None)
    raise ClassificationError(f"induced diagram on {nodes} is not spherical")


def _split_mask(mask: int, adjacency: tuple[int, ...]) -> list[int]:
    comps = []
    while mask:
        seed = mask & -mask
        comp = frontier = seed
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            new = adjacency[bit.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        mask &= ~comp
    return comps


@lru_cache(maxsize=None)
def _adjacency(spec: MonoidSpec) -> tuple[int, ...]:
    diagram = coxeter_diagram(spec)
    return tuple(
        sum(1 << (w - 1) for w in diagram.neighbours(v)) for v in spec.atoms
    )


@lru_cache(maxsize=None)
def _component_info(spec: MonoidSpec, comp_mask: int) -> tuple[Component, int]:
    nodes = [v for v in spec.atoms if comp_mask >> (v - 1) & 1]
    comp = classify_component(nodes, coxeter_diagram(spec))
    return comp, positive_roots(*comp)


def lcm_length_mask(spec: MonoidSpec, mask: int) -> int:
    """``lcm_length`` for a subset given as a bitmask (bit ``i-1`` is atom ``i``)."""
    return sum(_component_info(spec, c)[1] for c in _split_mask(mask, _adjacency(spec)))


def lcm_length(spec: MonoidSpec, subset) -> ParabolicInfo:
    subset = frozenset(subset)
    bad = [a for a in subset if a not in spec.atoms]
    if bad:
        raise SpecError(f"atoms {sorted(bad)} not in {spec}")
    mask = sum(1 << (a - 1) for a in subset)
    infos = [_component_info(spec, c) for c in _split_mask(mask, _adjacency(spec))]
    infos.sort(key=lambda info: (-info[1], info[0][0]))
    return ParabolicInfo(
        subset,
        tuple(comp for comp, _ in infos),
        sum(length for _, length in infos),
    )
