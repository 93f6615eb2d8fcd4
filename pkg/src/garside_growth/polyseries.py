"""Exact integer polynomials, polynomial matrices and power series inversion."""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from fractions import Fraction

from ._kronecker import mul_truncated

NEG_INF = float("-inf")


class IntPolynomial:
    """Dense univariate polynomial with unbounded integer coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``; trailing zeros are trimmed,
    so the zero polynomial has ``coeffs == ()`` and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coefficient])

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        return parse_polynomial(text)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial(-x for x in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        return IntPolynomial(mul_truncated(a, b, len(a) + len(b) - 1))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        out, base = IntPolynomial([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def exact_div(self, divisor: IntPolynomial) -> IntPolynomial:
        """Quotient in Z[t]; raises ``ArithmeticError`` if the division is inexact."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = divisor.coeffs
        lead, dd = d[-1], len(d) - 1
        if len(rem) <= dd:
            if rem:
                raise ArithmeticError("inexact polynomial division")
            return IntPolynomial()
        quot = [0] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quot[k - dd] = q
            for i, x in enumerate(d):
                rem[k - dd + i] -= q * x
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial(quot)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r})"


def _as_poly(x):
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    return NotImplemented


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a - b


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def format_polynomial(p: IntPolynomial, var: str = "t") -> str:
    """Render as ``"1 - 2*t + t^3"``: ascending exponents, explicit signs."""
    terms = []
    for e, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(terms) if terms else "0"


_TERM_RE = re.compile(
    r"([+-]?)(\d*)\s*\*?\s*(?:([a-z])(?:\s*\^\s*\{?\s*(\d+)\s*\}?)?)?", re.IGNORECASE
)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse the CLI text form and the compact TeX-like form (``2t^{10}-t^{20}``)."""
    if re.search(r"\d\s+\d", text):
        raise ValueError(f"cannot parse polynomial {text!r}")
    s = re.sub(r"\s+", "", text).replace("\\,", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    var = None
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"missing sign in {text!r} at {s[pos:]!r}")
        sign, num, v, exp = m.groups()
        if v is not None:
            if var is None:
                var = v
            elif v != var:
                raise ValueError(f"mixed variables in {text!r}")
        coeff = int(num) if num else 1
        e = (int(exp) if exp else 1) if v else 0
        coeffs[e] = coeffs.get(e, 0) + (-coeff if sign == "-" else coeff)
        pos = m.end()
    top = max(coeffs)
    return IntPolynomial([coeffs.get(e, 0) for e in range(top + 1)])


# -- polynomial matrices ------------------------------------------------------


class PolyMatrix:
    """Square matrix of ``IntPolynomial`` entries (0-based ``m[i, j]``)."""

    __slots__ = ("entries",)

    def __init__(self, rows: Sequence[Sequence]):
        entries = tuple(tuple(_as_poly(x) for x in row) for row in rows)
        if not entries or any(len(r) != len(entries) for r in entries):
            raise ValueError("PolyMatrix must be square and non-empty")
        if any(x is NotImplemented for r in entries for x in r):
            raise TypeError("entries must be IntPolynomial or int")
        self.entries = entries

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def column(self, j: int) -> list[IntPolynomial]:
        return [row[j] for row in self.entries]

    def minor(self, i: int, j: int) -> PolyMatrix:
        return PolyMatrix(
            [r[:j] + r[j + 1:] for k, r in enumerate(self.entries) if k != i]
        )

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"PolyMatrix([{body}])"


def cofactor_determinant(m: PolyMatrix) -> IntPolynomial:
    """Laplace expansion along the first row."""
    if m.order == 1:
        return m[0, 0]
    total = IntPolynomial()
    for j, entry in enumerate(m.entries[0]):
        if entry:
            term = entry * cofactor_determinant(m.minor(0, j))
            total = total - term if j % 2 else total + term
    return total


def bareiss_determinant(m: PolyMatrix) -> IntPolynomial:
    """Fraction-free Gaussian elimination over Z[t]."""
    a = [list(row) for row in m.entries]
    n = len(a)
    sign = 1
    prev = IntPolynomial([1])
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return IntPolynomial()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]).exact_div(prev)
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def determinant(m: PolyMatrix) -> IntPolynomial:
    if m.order <= 4:
        return cofactor_determinant(m)
    return bareiss_determinant(m)


# -- power series -------------------------------------------------------------


class CoeffStream:
    """Coefficients of ``1 / denominator`` produced by the linear recurrence
    ``alpha_k = -sum_{i=1..N} c_i alpha_{k-i}``.

    Extension is lazy and append-only; earlier coefficients never change.
    Not safe for concurrent extension.
    """

    def __init__(self, denominator: IntPolynomial):
        if denominator[0] != 1:
            raise ValueError(
                f"denominator must have constant term 1, got {denominator[0]}"
            )
        self.denominator = denominator
        self._c = denominator.coeffs
        self._alpha = [1]

    def extend(self, k: int) -> CoeffStream:
        c, alpha = self._c, self._alpha
        deg = len(c) - 1
        for n in range(len(alpha), k + 1):
            acc = 0
            for i in range(1, min(n, deg) + 1):
                if c[i]:
                    acc -= c[i] * alpha[n - i]
            alpha.append(acc)
        return self

    def __getitem__(self, k: int) -> int:
        if k < 0:
            return 0
        self.extend(k)
        return self._alpha[k]

    def coefficients(self, k: int) -> list[int]:
        """``[alpha_0, ..., alpha_k]``."""
        self.extend(k)
        return self._alpha[: k + 1]

    def __len__(self):
        return len(self._alpha)


def invert_series(denominator: IntPolynomial, up_to: int) -> CoeffStream:
    return CoeffStream(denominator).extend(up_to)


def series_mul_truncated(a: Sequence[int], b: Sequence[int], up_to: int) -> list[int]:
    """Cauchy product of two coefficient lists, keeping degrees ``0..up_to``."""
    out = mul_truncated(list(a), list(b), up_to + 1)
    return out + [0] * (up_to + 1 - len(out))


def eval_fraction(p: IntPolynomial, x: Fraction) -> Fraction:
    """Exact value of ``p`` at a rational point, using one common denominator."""
    num, den = x.numerator, x.denominator
    acc, scale = 0, 1
    for c in reversed(p.coeffs):
        acc = acc * num + c * scale
        scale *= den
    return Fraction(acc, scale // den if p.coeffs else 1)


def format_decimal(x: Fraction, digits: int) -> str:
    """Round an exact rational to ``digits`` decimal places (half away from zero)."""
    if digits < 0:
        raise ValueError("digits must be >= 0")
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    scaled = abs(x) * 10**digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    whole, frac = divmod(q, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
