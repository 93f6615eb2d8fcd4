"""Möbius polynomials by inclusion-exclusion, determinants and recurrences.

The growth function of each supported monoid is ``1 / H(t)``.  Three
independent constructions of ``H`` are provided so they can check each other:

* inclusion-exclusion over all atom subsets, weighted by ``t**lcm_length``;
* determinants of small banded matrices (types A, B, D);
* recurrences in the rank (types A, B, D), in two variants per family.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .polyseries import IntPolynomial, PolyMatrix, determinant
from .presentations import Family, MonoidSpec, SpecError, lcm_length_mask

DEFAULT_MAX_RANK = 20


class Method(str, enum.Enum):
    INCLUSION_EXCLUSION = "ie"
    DETERMINANT = "det"
    RECURRENCE = "rec"


class UnsupportedMethod(SpecError):
    pass


@dataclass(frozen=True)
class MoebiusResult:
    spec: MonoidSpec
    polynomial: IntPolynomial
    method: Method


def binom2(k: int) -> int:
    """``C(k, 2)``, zero for ``k`` in ``{0, 1}``."""
    if k < 0:
        raise ValueError("C(k, 2) needs k >= 0")
    return k * (k - 1) // 2


def t_pow(e: int, c: int = 1) -> IntPolynomial:
    return IntPolynomial.monomial(e, c)


# -- inclusion-exclusion ------------------------------------------------------


def moebius_by_inclusion_exclusion(
    spec: MonoidSpec, max_rank: int = DEFAULT_MAX_RANK
) -> MoebiusResult:
    """Sum ``(-1)^|S| t^lcm_length(S)`` over all ``2^n`` atom subsets.

    Subsets are visited in Gray-code order so that consecutive subsets differ
    by one atom; component lengths are cached per connected component.
    """
    n = spec.rank
    if n > max_rank:
        raise SpecError(
            f"{spec} has {n} atoms; exhaustive subsets are capped at {max_rank}"
        )
    coeffs: dict[int, int] = {0: 1}
    mask, parity = 0, 1
    for step in range(1, 1 << n):
        mask ^= step & -step
        parity = -parity
        e = lcm_length_mask(spec, mask)
        coeffs[e] = coeffs.get(e, 0) + parity
    poly = IntPolynomial([coeffs.get(e, 0) for e in range(max(coeffs) + 1)])
    return MoebiusResult(spec, poly, Method.INCLUSION_EXCLUSION)


# -- determinant matrices -----------------------------------------------------


def _banded(order: int) -> list[list[IntPolynomial]]:
    # entry (i, j), 1-based, is t^C(j-i+1, 2) on and above the subdiagonal
    rows = []
    for i in range(1, order + 1):
        rows.append([
            t_pow(binom2(j - i + 1)) if j - i + 1 >= 0 else IntPolynomial()
            for j in range(1, order + 1)
        ])
    return rows


def matrix_a(n: int) -> PolyMatrix:
    if n < 1:
        raise ValueError("matrix_a needs n >= 1")
    return PolyMatrix(_banded(n + 1))


def matrix_b(n: int) -> PolyMatrix:
    if n < 1:
        raise ValueError("matrix_b needs n >= 1")
    rows = _banded(n + 1)
    for i in range(1, n + 2):
        rows[i - 1][n] = t_pow((n - i + 1) ** 2)
    return PolyMatrix(rows)


def matrix_d(n: int) -> PolyMatrix:
    if n < 2:
        raise ValueError("matrix_d needs n >= 2")
    rows = _banded(n)
    for i in range(1, n + 1):
        r = n - i + 1
        rows[i - 1][n - 1] = t_pow(binom2(r), 2) - t_pow(r * (r - 1))
    return PolyMatrix(rows)


_MATRICES = {Family.A: matrix_a, Family.B: matrix_b, Family.D: matrix_d}


def moebius_by_determinant(spec: MonoidSpec) -> MoebiusResult:
    try:
        build = _MATRICES[spec.family]
    except KeyError:
        raise UnsupportedMethod(f"no determinant formula for {spec}") from None
    return MoebiusResult(spec, determinant(build(spec.rank)), Method.DETERMINANT)


# -- recurrences --------------------------------------------------------------


@lru_cache(maxsize=None)
def h_poly(n: int) -> IntPolynomial:
    """Type A: ``H_n = sum_{i=1}^{n+1} (-1)^(i-1) t^C(i,2) H_{n-i}``."""
    if n <= 0:
        return IntPolynomial([1])
    total = IntPolynomial()
    for i in range(1, n + 2):
        term = h_poly(n - i).shift(binom2(i))
        total = total + term if i % 2 else total - term
    return total


@lru_cache(maxsize=None)
def f_poly(n: int) -> IntPolynomial:
    """Type B, expansion along the first row (in terms of lower ``F``)."""
    if n <= 0:
        return IntPolynomial([1])
    total = IntPolynomial()
    for i in range(1, n + 1):
        term = f_poly(n - i).shift(binom2(i))
        total = total + term if i % 2 else total - term
    return total + t_pow(n * n, (-1) ** n)


def f_poly_from_h(n: int) -> IntPolynomial:
    """Type B, expansion along the last column (in terms of ``H``)."""
    if n <= 0:
        return IntPolynomial([1])
    total = IntPolynomial()
    for i in range(n + 1):
        term = h_poly(n - 1 - i).shift(i * i)
        total = total - term if i % 2 else total + term
    return total


def _d_corner(i: int) -> IntPolynomial:
    return t_pow(binom2(i), 2) - t_pow(i * (i - 1))


@lru_cache(maxsize=None)
def g_poly(n: int) -> IntPolynomial:
    """Type D, expansion along the first row; ``G_1 = 1``."""
    if n < 1:
        raise ValueError("G_n is defined for n >= 1")
    if n == 1:
        return IntPolynomial([1])
    total = IntPolynomial()
    for i in range(1, n):
        term = g_poly(n - i).shift(binom2(i))
        total = total + term if i % 2 else total - term
    corner = _d_corner(n)
    return total + corner if n % 2 else total - corner


def g_poly_from_h(n: int) -> IntPolynomial:
    """Type D, expansion along the last column (in terms of ``H``)."""
    if n < 2:
        raise ValueError("the cross-family D recurrence needs n >= 2")
    total = IntPolynomial()
    for i in range(1, n + 1):
        term = _d_corner(i) * h_poly(n - i - 1)
        total = total + term if i % 2 else total - term
    return total


_WITHIN = {Family.A: h_poly, Family.B: f_poly, Family.D: g_poly}
# type A has a single recurrence; both variants coincide
_CROSS = {Family.A: h_poly, Family.B: f_poly_from_h, Family.D: g_poly_from_h}


def moebius_by_recurrence(spec: MonoidSpec, variant: str = "within") -> MoebiusResult:
    """``variant`` is ``"within"`` (lower ranks of the same family) or
    ``"cross"`` (type A polynomials)."""
    table = {"within": _WITHIN, "cross": _CROSS}.get(variant)
    if table is None:
        raise ValueError(f"unknown recurrence variant {variant!r}")
    try:
        rec = table[spec.family]
    except KeyError:
        raise UnsupportedMethod(f"no recurrence for {spec}") from None
    return MoebiusResult(spec, rec(spec.rank), Method.RECURRENCE)


def default_method(spec: MonoidSpec) -> Method:
    if spec.family in _MATRICES:
        return Method.DETERMINANT
    return Method.INCLUSION_EXCLUSION


def moebius(spec: MonoidSpec, method: Method | str | None = None) -> MoebiusResult:
    method = default_method(spec) if method is None else Method(method)
    if method is Method.INCLUSION_EXCLUSION:
        return moebius_by_inclusion_exclusion(spec)
    if method is Method.DETERMINANT:
        return moebius_by_determinant(spec)
    return moebius_by_recurrence(spec)


def moebius_polynomial(spec: MonoidSpec) -> IntPolynomial:
    return moebius(spec).polynomial
