"""Stratified counting tables ``m_{k,i}`` (types A, B), ``d_{k,i}`` (type D)
and the stabilized table of the infinite braid monoid ``A_inf``.

``m_{k,i}`` counts elements of length ``k`` whose lexicographically maximal
representative only uses the letters ``a_1 .. a_i``; the last column holds the
total counts ``alpha_k``.  Rows are filled top-down and left-to-right because
each entry reads earlier columns of its row and earlier rows.
"""

from __future__ import annotations

import csv
import io
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Union

from .moebius import binom2
from .presentations import Family, MonoidSpec, SpecError

AINF = "Ainf"

TableSpec = Union[MonoidSpec, str]


@dataclass(frozen=True)
class GrowthTable:
    """Rows ``k = 0..K``; columns are 1-based as in ``entry(k, i)``."""

    spec: TableSpec
    rows: tuple[tuple[int, ...], ...]

    @property
    def column_count(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def depth(self) -> int:
        """Largest row index ``K``."""
        return len(self.rows) - 1

    def entry(self, k: int, i: int) -> int:
        """Total accessor: 0 above row 0 and in column 0.

        With ``m_{0,0} = 0`` the empty word falls in stratum 1, matching
        ``m_{0,1} = L_0 = 1``; row 0 itself is seeded, never computed.
        """
        if k < 0 or i == 0:
            return 0
        if k > self.depth or not 1 <= i <= self.column_count:
            raise IndexError(f"entry ({k}, {i}) outside the computed table")
        return self.rows[k][i - 1]

    def row(self, k: int) -> tuple[int, ...]:
        return self.rows[k]

    def column(self, i: int) -> list[int]:
        return [self.entry(k, i) for k in range(self.depth + 1)]

    def alpha(self) -> list[int]:
        return self.column(self.column_count)

    def strata(self, k: int) -> list[int]:
        """Column deltas ``m_{k,i} - m_{k,i-1}`` (first-letter counts)."""
        row = (self.entry(k, 0),) + self.rows[k]
        return [b - a for a, b in zip(row, row[1:])]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", *range(1, self.column_count + 1)])
        for k, row in enumerate(self.rows):
            w.writerow([k, *row])
        return buf.getvalue()


def _getter(rows: Sequence[Sequence[int]]):
    # m(t, i) with i 1-based, reading finished rows or the partial current row
    def m(t, i):
        if t < 0 or i == 0:
            return 0
        return rows[t][i - 1]

    return m


def build_table_a(n: int, K: int) -> GrowthTable:
    """``m_{k,i} = m_{k,i-1} + sum_{j=i..n} (-1)^(j-i) m_{k-C(j-i+2,2), j+1}``."""
    if n < 1 or K < 0:
        raise ValueError("build_table_a needs n >= 1 and K >= 0")
    rows: list[list[int]] = [[1] * (n + 1)]
    m = _getter(rows)
    for k in range(1, K + 1):
        rows.append([])
        cur = rows[k]
        for i in range(1, n + 2):
            v = m(k, i - 1)
            for j in range(i, n + 1):
                term = m(k - binom2(j - i + 2), j + 1)
                v += -term if (j - i) % 2 else term
            cur.append(v)
    return GrowthTable(MonoidSpec(Family.A, n), tuple(map(tuple, rows)))


def build_table_b(n: int, K: int) -> GrowthTable:
    """As type A, but the ``j = n`` term reads ``m_{k-(n-i+1)^2, n+1}``."""
    if n < 1 or K < 0:
        raise ValueError("build_table_b needs n >= 1 and K >= 0")
    rows: list[list[int]] = [[1] * (n + 1)]
    m = _getter(rows)
    for k in range(1, K + 1):
        rows.append([])
        cur = rows[k]
        for i in range(1, n + 1):
            v = m(k, i - 1)
            for j in range(i, n):
                term = m(k - binom2(j - i + 2), j + 1)
                v += -term if (j - i) % 2 else term
            last = m(k - (n - i + 1) ** 2, n + 1)
            v += -last if (n - i) % 2 else last
            cur.append(v)
        cur.append(cur[n - 1])  # m_{k,n+1} = m_{k,n}
    return GrowthTable(MonoidSpec(Family.B, n), tuple(map(tuple, rows)))


def build_table_d(n: int, K: int) -> GrowthTable:
    """The ``d``-table: ``n`` columns, the two last ones both equal ``alpha_k``."""
    if n < 2 or K < 0:
        raise ValueError("build_table_d needs n >= 2 and K >= 0")
    rows: list[list[int]] = [[1] * n]
    m = _getter(rows)
    for k in range(1, K + 1):
        rows.append([])
        cur = rows[k]
        for i in range(1, n):
            v = m(k, i - 1)
            for j in range(i, n):
                term = m(k - binom2(j - i + 2), j + 1)
                v += -term if (j - i) % 2 else term
            r = n - i + 1
            corner = m(k - binom2(r), n) - m(k - r * (r - 1), n)
            v += -corner if (n - i - 1) % 2 else corner
            cur.append(v)
        # i = n: the correction term cancels and d_{k,n} = d_{k,n-1}
        cur.append(cur[n - 2])
    return GrowthTable(MonoidSpec(Family.D, n), tuple(map(tuple, rows)))


_BUILDERS = {Family.A: build_table_a, Family.B: build_table_b, Family.D: build_table_d}


def build_table(spec: MonoidSpec, K: int) -> GrowthTable:
    try:
        build = _BUILDERS[spec.family]
    except KeyError:
        raise SpecError(f"no counting table for {spec}") from None
    return build(spec.rank, K)


def _limit_rows(K: int, columns: int) -> list[list[int]]:
    # row k carries columns + (K - k) entries: enough for every later row
    rows: list[list[int]] = []
    m = _getter(rows)
    for k in range(K + 1):
        width = columns + K - k
        if k == 0:
            rows.append([1] * width)
            continue
        rows.append([])
        cur = rows[k]
        for i in range(1, width + 1):
            v = m(k, i - 1)
            j = i
            while True:
                t = k - binom2(j - i + 2)
                if t < 0:
                    break
                term = m(t, j + 1)
                v += -term if (j - i) % 2 else term
                j += 1
            cur.append(v)
    return rows


def build_limit_table(K: int, columns: int | None = None, route: str = "recursion") -> GrowthTable:
    """Entries ``m_{k,i}`` of ``A_inf`` for ``k <= K`` and ``i <= columns``.

    ``route="recursion"`` runs the recurrence with an unbounded column range
    (the sum is finite because far terms fall above row 0);
    ``route="delegate"`` reads entry ``(k, i)`` from the finite table of
    ``A_{k+i-1}``, where it has already stabilized.
    """
    if K < 0:
        raise ValueError("K must be >= 0")
    columns = K + 1 if columns is None else columns
    if columns < 1:
        raise ValueError("columns must be >= 1")
    if route == "recursion":
        rows = [tuple(r[:columns]) for r in _limit_rows(K, columns)]
    elif route == "delegate":
        # one finite table per rank n, deep enough for every k with k + i - 1 = n
        finite = {
            n: build_table_a(n, min(K, n))
            for n in range(1, K + columns)
        }
        rows = [
            tuple(finite[max(k + i - 1, 1)].entry(k, i) for i in range(1, columns + 1))
            for k in range(K + 1)
        ]
    else:
        raise ValueError(f"unknown route {route!r}")
    return GrowthTable(AINF, tuple(rows))


def alpha_series(spec: MonoidSpec, K: int) -> list[int]:
    """``alpha_0 .. alpha_K`` read off the last table column."""
    return build_table(spec, K).alpha()
