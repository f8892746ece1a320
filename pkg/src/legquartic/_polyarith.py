"""Coefficient-list arithmetic over F_p.

A polynomial a_0 + a_1 x + ... + a_d x^d is the list [a_0, ..., a_d] of
integers in [0, p) with a_d != 0; the zero polynomial is []. These helpers
are shared by the field construction and by :mod:`legquartic.poly_fp`.
"""

import numpy as np

from .errors import ZeroModulusError

# above this length products go through numpy.convolve (exact in int64 as
# long as p^2 * length < 2^63, which holds for p <= 2^20 and length <= 2^22)
_NUMPY_CUTOFF = 48


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce_coeffs(a, p):
    return trim([c % p for c in a])


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def neg(a, p):
    return [(-c) % p for c in a]


def sub(a, b, p):
    return add(a, neg(b, p), p)


def scale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [(x * c) % p for x in a]


def mul(a, b, p):
    if not a or not b:
        return []
    if len(a) > _NUMPY_CUTOFF and len(b) > _NUMPY_CUTOFF:
        prod = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % p
        return trim(prod.tolist())
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(a, m, p):
    """Quotient and remainder of a by m over F_p."""
    if not m:
        raise ZeroModulusError("division by the zero polynomial")
    dm = len(m) - 1
    if len(a) - 1 < dm:
        return [], list(a)
    lead_inv = pow(m[-1], -1, p)
    if len(a) > _NUMPY_CUTOFF:
        r = np.asarray(a, dtype=np.int64).copy()
        mm = np.asarray(m, dtype=np.int64)
        quot = np.zeros(len(a) - dm, dtype=np.int64)
        for i in range(len(a) - 1, dm - 1, -1):
            c = (int(r[i]) * lead_inv) % p
            if c:
                quot[i - dm] = c
                seg = r[i - dm:i + 1]
                seg -= c * mm
                seg %= p
        return trim(quot.tolist()), trim(r[:dm].tolist())
    r = list(a)
    quot = [0] * (len(a) - dm)
    for i in range(len(a) - 1, dm - 1, -1):
        c = (r[i] * lead_inv) % p
        if c:
            quot[i - dm] = c
            for j in range(dm + 1):
                r[i - dm + j] = (r[i - dm + j] - c * m[j]) % p
    return trim(quot), trim(r[:dm])


def mod(a, m, p):
    return divmod_(a, m, p)[1]


def mulmod(a, b, m, p):
    return mod(mul(a, b, p), m, p)


def powmod(base, e, m, p):
    """base**e mod m by left-to-right square-and-multiply."""
    if not m:
        raise ZeroModulusError("reduction modulo the zero polynomial")
    result = mod([1], m, p)
    base = mod(base, m, p)
    for bit in bin(e)[2:] if e > 0 else "":
        result = mulmod(result, result, m, p)
        if bit == "1":
            result = mulmod(result, base, m, p)
    return result


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [(c * inv) % p for c in a]


def gcd(a, b, p):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def evaluate(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc
