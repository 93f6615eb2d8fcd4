"""Exponential growth rates from the smallest positive root of a Möbius polynomial.

The growth series ``1 / H(t)`` has nonnegative coefficients, so by
Pringsheim's theorem its radius of convergence ``r`` is a positive real root of
``H`` and ``H > 0`` on ``[0, r)``.  Every Möbius polynomial vanishes at 1 (the
alternating sum over all subsets), so ``0 < r <= 1`` and the growth rate is
``1 / r``.

The root is bracketed on dyadic rationals with exact integer arithmetic.  A
Sturm sequence certifies that the bracket holds the smallest root; plain sign
bisection then narrows it, falling back to Sturm counts at an even-multiplicity
root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .moebius import moebius_polynomial
from .polyseries import IntPolynomial, format_decimal
from .presentations import Family, MonoidSpec

Q_INFINITY_REFERENCE = Fraction("3.2336366652")


@dataclass(frozen=True)
class RateEstimate:
    spec: MonoidSpec
    root_lo: Fraction
    root_hi: Fraction
    bits: int
    rho: str

    @property
    def rho_lo(self) -> Fraction:
        return 1 / self.root_hi

    @property
    def rho_hi(self) -> Fraction:
        return 1 / self.root_lo

    @property
    def width(self) -> Fraction:
        return self.root_hi - self.root_lo


# -- exact evaluation ---------------------------------------------------------


def sign_at(coeffs, x: Fraction) -> int:
    """Sign of ``p(x)`` from one integer Horner pass on ``den^deg * p(x)``."""
    num, den = x.numerator, x.denominator
    acc, scale = 0, 1
    for c in reversed(coeffs):
        acc = acc * num + c * scale
        scale *= den
    return (acc > 0) - (acc < 0)


# -- Sturm sequences ----------------------------------------------------------


def _primitive(c):
    g = 0
    for x in c:
        g = gcd(g, x)
    return [x // g for x in c] if g > 1 else list(c)


def _prem(a, b):
    # lc(b)^(deg a - deg b + 1) * a  reduced mod b, over Z
    a = list(a)
    lc = b[-1]
    steps = len(a) - len(b) + 1
    for _ in range(steps):
        q = a[-1]
        a = [x * lc for x in a]
        off = len(a) - len(b)
        for i, y in enumerate(b):
            a[off + i] -= q * y
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a, lc ** steps


def _exact_quotient(a, b):
    # a / b over Q with zero remainder, rescaled to a primitive integer list
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        q[i] = a[i + len(b) - 1] / b[-1]
        for j, y in enumerate(b):
            a[i + j] -= q[i] * y
    if any(a):
        raise ArithmeticError("division is not exact")
    den = 1
    for x in q:
        den = den * x.denominator // gcd(den, x.denominator)
    return _primitive([int(x * den) for x in q])


def _chain(a):
    b = [i * c for i, c in enumerate(a)][1:]
    chain = [a]
    while b:
        chain.append(b)
        r, mult = _prem(a, b)
        if not r:
            break
        # the true remainder is r / mult; the chain wants its negative
        r = [-x for x in r] if mult > 0 else r
        a, b = b, _primitive(r)
    return chain


def sturm_sequence(p: IntPolynomial) -> list[list[int]]:
    """Sturm chain of the squarefree part of ``p``.

    Repeated roots are divided out first: a chain with a nonconstant last
    member vanishes identically at those roots and miscounts there.
    """
    chain = _chain(list(p.coeffs))
    if len(chain[-1]) > 1:
        chain = _chain(_exact_quotient(p.coeffs, chain[-1]))
    return chain


def count_roots(chain, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in ``(lo, hi]``."""
    def variations(x):
        signs = [s for s in (sign_at(c, x) for c in chain) if s]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    return variations(Fraction(lo)) - variations(Fraction(hi))


# -- root isolation -----------------------------------------------------------


def smallest_root_bracket(p: IntPolynomial, bits: int) -> tuple[Fraction, Fraction]:
    """Dyadic bracket ``(lo, hi)``, width ``<= 2^-bits``, around the smallest
    root of ``p`` in ``(0, 1]``, given ``p(0) > 0`` and ``p(1) = 0``.

    An exactly representable root ``r`` (for instance 1 for ``1 - t``) comes
    back as ``(r, r)``.
    """
    if bits < 1:
        raise ValueError("bits must be >= 1")
    if p[0] <= 0:
        raise ArithmeticError("polynomial must be positive at 0")
    if p(1) != 0:
        raise ArithmeticError("a Möbius polynomial vanishes at 1")
    chain = sturm_sequence(p)
    one = Fraction(1)
    if count_roots(chain, 0, one) == 1:
        return one, one  # the only root in (0, 1] is 1 itself
    # invariant: no root in (0, lo], at least one root in (lo, hi]
    lo, hi = Fraction(0), one
    while lo == 0 or count_roots(chain, lo, hi) != 1:
        mid = (lo + hi) / 2
        if count_roots(chain, lo, mid):
            hi = mid
        else:
            lo = mid
    width = Fraction(1, 1 << bits)
    s_lo, s_hi = sign_at(p.coeffs, lo), sign_at(p.coeffs, hi)
    if s_hi == 0:
        return hi, hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = sign_at(p.coeffs, mid)
        if s_mid == 0:
            return mid, mid
        if s_lo != s_hi:
            # the isolated root has odd multiplicity: plain sign bisection
            if s_mid == s_lo:
                lo = mid
            else:
                hi = mid
        elif count_roots(chain, lo, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def rho_digits(bits: int) -> int:
    # decimal places that the bracket width can support
    return max(1, (bits * 30103) // 100000 - 2)


def growth_rate(spec: MonoidSpec, bits: int = 64) -> RateEstimate:
    """Growth rate ``1 / r`` with ``r`` the smallest positive root of ``H``."""
    lo, hi = smallest_root_bracket(moebius_polynomial(spec), bits)
    rho = format_decimal(2 / (lo + hi), rho_digits(bits))
    return RateEstimate(spec, lo, hi, bits, rho)


def rho_sequence(family: Family, n_max: int, bits: int = 64, n_min: int = 1) -> list[RateEstimate]:
    return [growth_rate(MonoidSpec(Family(family), n), bits) for n in range(n_min, n_max + 1)]


def rho_sequence_a(n_max: int, bits: int = 64) -> list[RateEstimate]:
    """``rho(A_1) .. rho(A_nMax)``; raises if the brackets contradict monotonicity."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    seq = rho_sequence(Family.A, n_max, bits)
    for prev, cur in zip(seq, seq[1:]):
        # rho nondecreasing <=> roots nonincreasing; allow one bracket width
        if cur.root_lo > prev.root_hi:
            raise ArithmeticError(f"rho({cur.spec}) < rho({prev.spec}) beyond bracket resolution")
    return seq


def q_gap(estimate: RateEstimate, q: Fraction = Q_INFINITY_REFERENCE) -> Fraction:
    """``q - rho``, using the upper end of the rho bracket (a lower bound on the gap)."""
    return q - estimate.rho_hi


def c_diagnostic(rho_n: Fraction, mu: Fraction) -> Fraction:
    """``mu / (mu - rho_n)``: blows up as ``rho_n`` approaches ``mu``."""
    rho_n, mu = Fraction(rho_n), Fraction(mu)
    if mu <= rho_n:
        raise ValueError("need mu > rho_n")
    return mu / (mu - rho_n)
