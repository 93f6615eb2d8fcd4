"""Truncated products of integer series via Kronecker substitution.

Each series is packed into one big integer with a fixed-width slot per
coefficient; a single big-integer product then yields every coefficient.
Signed coefficients are handled with a balanced-digit decode.  GMP (through
gmpy2) supplies the subquadratic product.
"""

from __future__ import annotations

import gmpy2

# below this many terms the schoolbook product wins
SCHOOLBOOK_CUTOFF = 40


def schoolbook(a, b, n):
    n = min(n, len(a) + len(b) - 1)
    if n <= 0:
        return []
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[: n - i]):
                out[i + j] += x * y
    return out


def _offset(a, slope):
    return max(
        (int(x).bit_length() - slope * i for i, x in enumerate(a) if x),
        default=0.0,
    )


def _slope(a):
    # rough growth rate of coefficient bit lengths; any value is safe
    tail = a[-max(1, len(a) // 8):]
    return max(int(x).bit_length() for x in tail) / len(a)


def _big(x):
    return gmpy2.mpz(x)


def _pack(a, width):
    nbytes = width // 8
    full = 1 << width
    pos = bytearray()
    neg = None
    for k, x in enumerate(a):
        if x >= 0:
            pos += int(x).to_bytes(nbytes, "little")
        else:
            pos += int(full + x).to_bytes(nbytes, "little")
            if neg is None:
                neg = bytearray(nbytes * len(a))
            neg[k * nbytes] = 1
    v = _big(int.from_bytes(pos, "little"))
    if neg is not None:
        v -= _big(int.from_bytes(neg, "little")) << width
    return v


def _unpack(v, width, n):
    nbytes = width // 8
    total = width * n
    v = int(gmpy2.f_mod_2exp(v, total))
    raw = v.to_bytes(nbytes * n, "little")
    half, full = 1 << (width - 1), 1 << width
    out, carry = [], 0
    for k in range(n):
        d = int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") + carry
        if d >= half:
            out.append(d - full)
            carry = 1
        else:
            out.append(d)
            carry = 0
    return out


def mul_truncated(a, b, n):
    """First ``n`` coefficients of the product of coefficient lists ``a``, ``b``.

    The result has ``min(n, len(a) + len(b) - 1)`` entries.
    """
    a, b = list(a[:n]), list(b[:n])
    if not a or not b:
        return []
    n = min(n, len(a) + len(b) - 1)
    if min(len(a), len(b)) < SCHOOLBOOK_CUTOFF:
        return schoolbook(a, b, n)
    # |c_k| <= sum |a_i||b_{k-i}| < (k+1) 2^(slope*k + off_a + off_b)
    slope = max(_slope(a), _slope(b))
    bits = slope * (n - 1) + _offset(a, slope) + _offset(b, slope)
    width = int(bits) + n.bit_length() + 3
    # inputs must fit their slots too (offsets can be negative for sparse heads)
    width = max(width, *(int(x).bit_length() + 2 for x in a + b))
    width = (width + 7) // 8 * 8
    return _unpack(_pack(a, width) * _pack(b, width), width, n)
