"""Arithmetic in F_{p^n} for odd p.

Elements are coefficient vectors in the polynomial basis 1, a, ..., a^(n-1),
where a is the class of x modulo the field's reduction polynomial. The
canonical integer encoding of an element is sum(coeffs[i] * p**i); every
public interface of the package speaks in these indices.

Two layers live here:

* scalar operations on :class:`FieldElement` (exact, any q <= 2**40);
* :class:`FieldTables`, per-field numpy tables (discrete log/exp, quadratic
  character) that the sweep kernels index into. Tables are built on demand
  and only for q <= TABLE_CAP.
"""

from dataclasses import dataclass
from functools import lru_cache
import itertools

import numpy as np
from sympy import factorint, isprime

from . import _polyarith as pa
from .errors import (
    EvenCharacteristicError,
    FieldTooLargeError,
    NotPrimeError,
    SpecMismatchError,
    SweepCapExceededError,
    ZeroInversionError,
)

Q_MAX = 2**40
TABLE_CAP = 2**24


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int
    q: int
    modulus: tuple

    def __str__(self):
        return f"F_{self.p}^{self.n}" if self.n > 1 else f"F_{self.p}"

    def to_dict(self):
        return {"p": self.p, "n": self.n, "q": self.q, "modulus": list(self.modulus)}


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple

    def index(self, p):
        return sum(c * p**i for i, c in enumerate(self.coeffs))


def _checked_power(p, n):
    q = 1
    for _ in range(n):
        q *= p
        if q > Q_MAX:
            raise FieldTooLargeError(f"{p}^{n} exceeds 2^40")
    return q


def is_irreducible(poly, p):
    """Rabin's test for a monic polynomial over F_p (constant term first)."""
    f = pa.trim(poly)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if f[0] == 0:
        return False

    def frob_power(k):
        # x^(p^k) mod f
        h = [0, 1]
        for _ in range(k):
            h = pa.powmod(h, p, f, p)
        return h

    if frob_power(n) != pa.mod([0, 1], f, p):
        return False
    for ell in factorint(n):
        h = pa.sub(frob_power(n // ell), [0, 1], p)
        if len(pa.gcd(h, f, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def make_field(p, n=1):
    """Build F_{p^n} with the lexicographically smallest monic irreducible modulus."""
    p, n = int(p), int(n)
    if p == 2:
        raise EvenCharacteristicError("characteristic 2 is not supported")
    if p < 2 or not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    q = _checked_power(p, n)
    if n == 1:
        return FieldSpec(p, 1, q, (0, 1))
    # product() varies the last position fastest, so the constant term is
    # the most significant key, matching constant-term-first list ordering
    for low in itertools.product(range(p), repeat=n):
        if low[0] == 0:
            continue
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return FieldSpec(p, n, q, tuple(cand))
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def field_for_q(q):
    """The field of size q, for q an odd prime power."""
    from .classify import prime_power

    p, n = prime_power(q)
    return make_field(p, n)


# --- scalar element arithmetic -------------------------------------------

def element(spec, index):
    """Decode a canonical index into a FieldElement."""
    index = int(index)
    if not 0 <= index < spec.q:
        raise SpecMismatchError(f"index {index} outside [0, {spec.q})")
    coeffs = []
    for _ in range(spec.n):
        index, d = divmod(index, spec.p)
        coeffs.append(d)
    return FieldElement(tuple(coeffs))


def index_of(spec, a):
    check_element(spec, a)
    return a.index(spec.p)


def check_element(spec, a):
    if not isinstance(a, FieldElement):
        raise SpecMismatchError(f"expected FieldElement, got {type(a).__name__}")
    if len(a.coeffs) != spec.n or not all(0 <= c < spec.p for c in a.coeffs):
        raise SpecMismatchError(f"{a} is not an element of {spec}")


def as_element(spec, a):
    """Accept a FieldElement or a canonical index."""
    if isinstance(a, FieldElement):
        check_element(spec, a)
        return a
    return element(spec, a)


def as_index(spec, a):
    if isinstance(a, FieldElement):
        return index_of(spec, a)
    a = int(a)
    if not 0 <= a < spec.q:
        raise SpecMismatchError(f"index {a} outside [0, {spec.q})")
    return a


def from_int(spec, k):
    """The image of the integer k in the prime subfield."""
    return FieldElement(((k % spec.p),) + (0,) * (spec.n - 1))


def zero(spec):
    return from_int(spec, 0)


def one(spec):
    return from_int(spec, 1)


def _pad(spec, coeffs):
    coeffs = list(coeffs)
    return FieldElement(tuple(coeffs + [0] * (spec.n - len(coeffs))))


def add(spec, a, b):
    check_element(spec, a)
    check_element(spec, b)
    p = spec.p
    return FieldElement(tuple((x + y) % p for x, y in zip(a.coeffs, b.coeffs)))


def neg(spec, a):
    check_element(spec, a)
    return FieldElement(tuple((-x) % spec.p for x in a.coeffs))


def sub(spec, a, b):
    return add(spec, a, neg(spec, b))


def mul(spec, a, b):
    check_element(spec, a)
    check_element(spec, b)
    prod = pa.mulmod(pa.trim(a.coeffs), pa.trim(b.coeffs), list(spec.modulus), spec.p)
    return _pad(spec, prod)


def power(spec, a, e):
    check_element(spec, a)
    e = int(e)
    if e < 0:
        return power(spec, inv(spec, a), -e)
    prod = pa.powmod(pa.trim(a.coeffs), e, list(spec.modulus), spec.p)
    return _pad(spec, prod)


def inv(spec, a):
    check_element(spec, a)
    if not any(a.coeffs):
        raise ZeroInversionError("inverse of zero")
    return power(spec, a, spec.q - 2)


def div(spec, a, b):
    return mul(spec, a, inv(spec, b))


_OPS = {"add": add, "sub": sub, "mul": mul, "div": div, "pow": power}


def ff_arith(spec, kind, a, b=None):
    """Dispatch on ``kind`` in {add, sub, mul, div, inv, pow, neg}."""
    if kind == "inv":
        return inv(spec, a)
    if kind == "neg":
        return neg(spec, a)
    try:
        op = _OPS[kind]
    except KeyError:
        raise ValueError(f"unknown operation {kind!r}") from None
    return op(spec, a, b)


def quad_char(spec, a):
    """Quadratic character by Euler's criterion: 0, +1 or -1."""
    check_element(spec, a)
    if not any(a.coeffs):
        return 0
    r = power(spec, a, (spec.q - 1) // 2)
    return 1 if r == one(spec) else -1


def enumerate_field(spec):
    """All q elements in increasing canonical-index order."""
    for coeffs in itertools.product(range(spec.p), repeat=spec.n):
        yield FieldElement(tuple(reversed(coeffs)))


# --- tables for sweeps ------------------------------------------------------

def primitive_element(spec):
    """Smallest-index generator of the multiplicative group."""
    qm1 = spec.q - 1
    cofactors = [qm1 // ell for ell in factorint(qm1)]
    unit = one(spec)
    for idx in range(1, spec.q):
        g = element(spec, idx)
        if all(power(spec, g, c) != unit for c in cofactors):
            return idx
    raise AssertionError("no primitive element")  # pragma: no cover


def _mul_rows(digits, c, spec):
    """Multiply every row of a (k, n) digit matrix by the fixed element c."""
    p, n = spec.p, spec.n
    if n == 1:
        return digits * c.coeffs[0] % p
    prod = np.zeros((digits.shape[0], 2 * n - 1), dtype=np.int64)
    for j, cj in enumerate(c.coeffs):
        if cj:
            prod[:, j:j + n] += digits * cj
    prod %= p
    mod = np.asarray(spec.modulus[:n], dtype=np.int64)
    for deg in range(2 * n - 2, n - 1, -1):
        top = prod[:, deg].copy()
        prod[:, deg - n:deg] -= top[:, None] * mod
        prod[:, deg - n:deg] %= p
    return prod[:, :n]


class FieldTables:
    """Discrete log / exp and quadratic-character tables of one field.

    ``log[0]`` is -1; ``chi`` is an int8 array with chi[0] = 0.
    """

    def __init__(self, spec):
        if spec.q > TABLE_CAP:
            raise SweepCapExceededError(f"q={spec.q} exceeds the table cap {TABLE_CAP}")
        self.spec = spec
        p, n, q = spec.p, spec.n, spec.q
        self.p, self.n, self.q = p, n, q
        self.powers = np.array([p**i for i in range(n)], dtype=np.int64)
        self.generator = primitive_element(spec)
        g = element(spec, self.generator)

        qm1 = q - 1
        digits = np.zeros((1, n), dtype=np.int64)
        digits[0, 0] = 1
        step = g
        while digits.shape[0] < qm1:
            digits = np.vstack([digits, _mul_rows(digits, step, spec)])
            step = mul(spec, step, step)
        exp = (digits[:qm1] @ self.powers).astype(np.int64)
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(qm1, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError("generator does not span the multiplicative group")
        self.exp = exp
        self.log = log

        # square every nonzero element: (g^k)^2 = g^(2k)
        is_square = np.zeros(q, dtype=bool)
        is_square[exp[(2 * np.arange(qm1)) % qm1]] = True
        chi = np.where(is_square, 1, -1).astype(np.int8)
        chi[0] = 0
        self.is_square = is_square
        self.chi = chi

    # vectorized index arithmetic; all arguments are int64 arrays or ints
    def digits(self, u):
        u = np.asarray(u, dtype=np.int64)
        return (u[..., None] // self.powers) % self.p

    def add(self, u, v):
        p = self.p
        if self.n == 1:
            return (np.asarray(u, dtype=np.int64) + v) % p
        return ((self.digits(u) + self.digits(v)) % p) @ self.powers

    def neg(self, u):
        if self.n == 1:
            return (-np.asarray(u, dtype=np.int64)) % self.p
        return ((-self.digits(u)) % self.p) @ self.powers

    def sub(self, u, v):
        return self.add(u, self.neg(v))

    def add_int(self, u, k):
        """u + k for k in the prime subfield; only the constant digit moves."""
        u = np.asarray(u, dtype=np.int64)
        d0 = u % self.p
        return u - d0 + (d0 + k) % self.p

    def mul(self, u, v):
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        k = (self.log[u] + self.log[v]) % (self.q - 1)
        return np.where((u == 0) | (v == 0), 0, self.exp[k])

    def inv(self, u):
        u = np.asarray(u, dtype=np.int64)
        if (u == 0).any():
            raise ZeroInversionError("inverse of zero")
        return self.exp[(-self.log[u]) % (self.q - 1)]

    def div(self, u, v):
        return self.mul(u, self.inv(v))

    def pow(self, u, e):
        u = np.asarray(u, dtype=np.int64)
        k = (self.log[u] * (e % (self.q - 1))) % (self.q - 1)
        if e == 0:
            return np.ones_like(u)
        return np.where(u == 0, 0, self.exp[k])


@lru_cache(maxsize=16)
def field_tables(spec):
    return FieldTables(spec)
