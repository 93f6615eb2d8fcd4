"""Coefficients of the leading root of the partial theta function.

With ``f(x, y) = sum_r y^C(r,2) x^r`` the leading root is the power series
``x0(y)`` with ``f(x0(y), y) = 0``; we work with ``xi(y) = -x0(y) = sum L_k y^k``,
which is the root of ``F(xi) = sum_r (-1)^r y^C(r,2) xi^r``.  ``L_k`` counts
braids of length ``k`` in ``A_inf`` whose lex-representative starts with
``a_1``, and ``xi^t`` is column ``t`` of the limit table.

Two routes compute ``L_k``:

* ``"recursion"``: column 1 of the limit table (quadratic in ``K``, small K);
* ``"newton"``: Newton iteration on ``F`` in the power series ring, doubling
  the number of correct terms each step.  ``F`` is evaluated with the
  Paterson-Stockmeyer scheme, so only ``O(sqrt(K))`` full-length products are
  needed per step, and those go through Kronecker substitution.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2

from ._kronecker import mul_truncated, schoolbook
from .moebius import binom2
from .polyseries import format_decimal, series_mul_truncated
from .tables import build_limit_table

log = logging.getLogger(__name__)

# reference digits of the growth constant of the L_k
Q_INFINITY_REFERENCE = Fraction("3.2336366652")


def _sign(e):
    return -1 if e & 1 else 1


def _eval_ps(pows, s, coef, deg, prec):
    """``sum_e coef(e) y^deg(e) xi^e mod y^prec`` (Paterson-Stockmeyer).

    ``pows[i] = xi^i`` for ``i = 0..s``.  Exponents are cut into blocks of
    ``s``; block ``g`` is assembled from the baby steps and the running tail
    is multiplied by the giant step ``xi^s`` once per block.  Since
    ``deg`` grows quadratically, block ``g`` only needs precision
    ``prec - deg(g*s)``.
    """
    blocks = 0
    while deg(blocks * s) < prec:
        blocks += 1
    acc = None
    for g in range(blocks - 1, -1, -1):
        base = deg(g * s)
        width = prec - base
        blk = [0] * width
        for i in range(s):
            e = g * s + i
            sh = deg(e) - base
            if sh >= width:
                break
            c = coef(e)
            pw = pows[i]
            for t in range(min(width - sh, len(pw))):
                blk[sh + t] += c * pw[t]
        if acc is not None:
            sh = deg((g + 1) * s) - base
            if sh < width:
                for t, v in enumerate(mul_truncated(pows[s], acc, width - sh)):
                    blk[sh + t] += v
        acc = blk
    return acc


def _inverse(f, n):
    # Newton for 1/f mod y^n; f[0] is +1 or -1
    g = [f[0]]
    m = 1
    while m < n:
        m2 = min(2 * m, n)
        e = [-x for x in mul_truncated(f, g, m2)]
        e += [0] * (m2 - len(e))
        e[0] += 2
        g = mul_truncated(g, e, m2)
        m = m2
    return g


def _newton_step(xi, m, target):
    """Extend ``xi`` from ``m`` correct terms to ``target <= 2m``."""
    R = 1
    while binom2(R) < target:
        R += 1
    s = max(2, math.isqrt(R))
    head = xi[:m] + [0] * (target - m)
    pows = [[1], head]
    for _ in range(2, s + 1):
        pows.append(mul_truncated(pows[-1], head, target))
    F = _eval_ps(pows, s, _sign, binom2, target)
    if any(F[:m]):
        raise ArithmeticError("Newton prefix is not a root to the claimed order")
    dF = _eval_ps(
        [p[:m] for p in pows], s,
        lambda e: _sign(e + 1) * (e + 1), lambda e: binom2(e + 1),
        target - m,
    )
    delta = mul_truncated(F[m:], _inverse(dF, target - m), target - m)
    for t, v in enumerate(delta):
        head[m + t] -= v
    return head


@dataclass
class ThetaSeries:
    """Growable list of ``L_0, L_1, ...``; extension never changes earlier terms."""

    coefficients: list = field(default_factory=lambda: [1])

    def extend(self, K: int) -> ThetaSeries:
        xi = self.coefficients
        m = len(xi)
        while m < K + 1:
            target = min(2 * m, K + 1)
            xi = _newton_step(xi, m, target)
            m = target
        self.coefficients = xi
        return self

    def __getitem__(self, k):
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)

    def snapshot(self, K: int | None = None) -> tuple[int, ...]:
        K = len(self.coefficients) - 1 if K is None else K
        return tuple(self.extend(K).coefficients[: K + 1])


def theta_coefficients(K: int, method: str = "newton") -> ThetaSeries:
    """``L_0 .. L_K``."""
    if K < 0:
        raise ValueError("K must be >= 0")
    if method == "newton":
        return ThetaSeries().extend(K)
    if method == "recursion":
        return ThetaSeries(build_limit_table(K, 1).column(1))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class RootReport:
    K: int
    passed: bool
    first_failure: int | None
    residual: tuple[int, ...]


def verify_leading_root(K: int, coefficients=None) -> RootReport:
    """Substitute ``x = -sum_{k<=K} L_k y^k`` into ``f`` and check that the
    coefficients of ``y^0 .. y^K`` vanish.

    Uses plain schoolbook products, independent of the Newton route.
    """
    if K < 0:
        raise ValueError("K must be >= 0")
    if coefficients is None:
        coefficients = theta_coefficients(K).coefficients
    if len(coefficients) < K + 1:
        raise ValueError(f"need {K + 1} coefficients, got {len(coefficients)}")
    x = [-c for c in coefficients[: K + 1]]
    total = [0] * (K + 1)
    power = [1] + [0] * K
    r = 0
    while binom2(r) <= K:
        sh = binom2(r)
        for t in range(K + 1 - sh):
            total[sh + t] += power[t]
        power = schoolbook(power, x, K + 1)
        r += 1
    bad = next((k for k, v in enumerate(total) if v), None)
    return RootReport(K, bad is None, bad, tuple(total))


def power_coefficients(t: int, K: int, coefficients=None) -> list[int]:
    """Coefficients of ``xi^t`` through ``y^K`` by repeated truncated products."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if coefficients is None:
        coefficients = theta_coefficients(K).coefficients
    base = list(coefficients[: K + 1])
    out = base
    for _ in range(t - 1):
        out = series_mul_truncated(out, base, K)
    return out


@dataclass(frozen=True)
class RatioEstimate:
    """Estimates of the growth constant at depth ``k`` (never the constant itself)."""

    k: int
    ratio: Fraction
    digits: int
    value: str
    root: str

    @property
    def label(self) -> str:
        return f"estimate at depth {self.k}"


def kth_root_decimal(n: int, k: int, digits: int) -> str:
    """``n^(1/k)`` truncated to ``digits`` places, by an exact integer root."""
    r, _ = gmpy2.iroot(gmpy2.mpz(n) * gmpy2.mpz(10) ** (digits * k), k)
    whole, frac = divmod(int(r), 10**digits)
    return f"{whole}.{frac:0{digits}d}" if digits else str(whole)


def estimate_q_infinity(K: int, digits: int = 12, coefficients=None) -> RatioEstimate:
    """``L_K / L_{K-1}`` as an exact ratio plus the root estimate ``L_K^(1/K)``."""
    if K < 2:
        raise ValueError("K must be >= 2")
    if coefficients is None:
        coefficients = theta_coefficients(K).coefficients
    ratio = Fraction(coefficients[K], coefficients[K - 1])
    return RatioEstimate(
        K, ratio, digits,
        format_decimal(ratio, digits),
        kth_root_decimal(coefficients[K], K, digits),
    )


def ratio_diagnostics(coefficients, lo: int = 10, hi: int | None = None):
    """``(k, r_k, r_k - r_{k-1})`` for ``r_k = L_k / L_{k-1}``, logged at debug level.

    The ratios approach the limit like ``q (1 - 3/(2k))``, so successive
    differences shrink like ``1/k^2``.
    """
    hi = len(coefficients) - 1 if hi is None else hi
    out = []
    prev = None
    for k in range(max(lo, 2), hi + 1):
        r = Fraction(coefficients[k], coefficients[k - 1])
        diff = None if prev is None else r - prev
        out.append((k, r, diff))
        if diff is not None:
            log.debug("k=%d ratio=%s diff=%s", k, format_decimal(r, 8), format_decimal(diff, 8))
        prev = r
    return out


def extrapolated_ratio(K: int, digits: int = 12, coefficients=None) -> str:
    """``K r_K - (K-1) r_{K-1}``: cancels the ``1/k`` term of the ratio drift.

    A diagnostic only; it is not the plain ratio estimator.
    """
    if K < 3:
        raise ValueError("K must be >= 3")
    if coefficients is None:
        coefficients = theta_coefficients(K).coefficients
    r1 = Fraction(coefficients[K], coefficients[K - 1])
    r0 = Fraction(coefficients[K - 1], coefficients[K - 2])
    return format_decimal(K * r1 - (K - 1) * r0, digits)
