"""Polynomials over F_p, the Hasse polynomial, and root finding.

H_p(l) = sum_{i=0}^{(p-1)/2} binom((p-1)/2, i)^2 l^i  (mod p)

For E_l : y^2 = x(x-1)(x-l) over F_p the Frobenius trace satisfies
t = (-1)^((p-1)/2) H_p(l) (mod p); over F_{p^2} the same holds with the value
raised to the power 1 + p (its norm down to F_p).
"""

from dataclasses import dataclass
from functools import lru_cache
import random

from sympy import isprime

from . import _polyarith as pa
from . import kernels
from .errors import (
    EvenCharacteristicError,
    NotPrimeError,
    SingularParameterError,
    SpecMismatchError,
    ZeroModulusError,
)
from .finite_field import FieldElement, check_element, field_tables, make_field

HASSE_P_MAX = 2**20


@dataclass(frozen=True)
class PolyFp:
    p: int
    coeffs: tuple

    @classmethod
    def of(cls, p, coeffs):
        return cls(p, tuple(pa.reduce_coeffs(coeffs, p)))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        return pa.evaluate(self.coeffs, x, self.p)

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs) or "0"


def _same_ring(*polys):
    p = polys[0].p
    if any(f.p != p for f in polys):
        raise SpecMismatchError("polynomials over different primes")
    return p


def _check_odd_prime(p):
    if p == 2:
        raise EvenCharacteristicError("p must be odd")
    if p < 2 or not isprime(p):
        raise NotPrimeError(f"{p} is not prime")


@lru_cache(maxsize=64)
def hasse_polynomial(p):
    _check_odd_prime(p)
    if p > HASSE_P_MAX:
        raise ValueError(f"p={p} exceeds {HASSE_P_MAX}")
    h = (p - 1) // 2
    coeffs = [1]
    c = 1
    for i in range(h):
        # binom(h, i+1)^2 = binom(h, i)^2 * ((h - i) / (i + 1))^2
        c = c * (h - i) * (h - i) % p * pow((i + 1) * (i + 1), -1, p) % p
        coeffs.append(c)
    return PolyFp.of(p, coeffs)


def poly_add(a, b):
    return PolyFp(_same_ring(a, b), tuple(pa.add(a.coeffs, b.coeffs, a.p)))


def poly_sub(a, b):
    return PolyFp(_same_ring(a, b), tuple(pa.sub(a.coeffs, b.coeffs, a.p)))


def poly_mul(a, b):
    return PolyFp(_same_ring(a, b), tuple(pa.mul(a.coeffs, b.coeffs, a.p)))


def poly_divmod(a, b):
    p = _same_ring(a, b)
    quot, rem = pa.divmod_(a.coeffs, b.coeffs, p)
    return PolyFp(p, tuple(quot)), PolyFp(p, tuple(rem))


def poly_mulmod(a, b, m):
    p = _same_ring(a, b, m)
    if not m.coeffs:
        raise ZeroModulusError("reduction modulo the zero polynomial")
    return PolyFp(p, tuple(pa.mulmod(a.coeffs, b.coeffs, m.coeffs, p)))


def poly_powmod(base, e, m):
    p = _same_ring(base, m)
    return PolyFp(p, tuple(pa.powmod(base.coeffs, e, m.coeffs, p)))


def poly_gcd(a, b):
    p = _same_ring(a, b)
    return PolyFp(p, tuple(pa.gcd(a.coeffs, b.coeffs, p)))


def poly_roots(f, seed=0):
    """Set of roots of f in F_p.

    g = gcd(f, x^p - x) collects the distinct linear factors; g is then split
    by gcd(g, (x + c)^((p-1)/2) - 1) for shifts c drawn from
    random.Random(seed). The result does not depend on the seed.
    """
    p = f.p
    if not f.coeffs:
        raise ZeroModulusError("every element is a root of the zero polynomial")
    f = list(f.coeffs)
    xp = pa.powmod([0, 1], p, f, p)
    g = pa.gcd(f, pa.sub(xp, [0, 1], p), p)
    rng = random.Random(seed)
    roots = set()
    stack = [g]
    half = (p - 1) // 2
    while stack:
        g = stack.pop()
        d = len(g) - 1
        if d < 1:
            continue
        if d == 1:
            roots.add((-g[0] * pow(g[1], -1, p)) % p)
            continue
        while True:
            c = rng.randrange(p)
            h = pa.powmod([c, 1], half, g, p)
            h = pa.gcd(g, pa.sub(h, [1], p), p)
            if 0 < len(h) - 1 < d:
                break
        stack.append(h)
        stack.append(pa.divmod_(g, h, p)[0])
    return roots


def hasse_trace_residue(p, e, lam):
    """t mod p for E_lam over F_p (e = 1) or F_{p^2} (e = 1 + p)."""
    _check_odd_prime(p)
    if e == 1:
        spec = make_field(p, 1)
    elif e == 1 + p:
        spec = make_field(p, 2)
    else:
        raise ValueError("e must be 1 or 1 + p")
    if isinstance(lam, FieldElement):
        check_element(spec, lam)
        idx = lam.index(p)
    else:
        idx = int(lam)
        if not 0 <= idx < spec.q:
            raise SpecMismatchError(f"lambda index {idx} not in {spec}")
    if idx in (0, 1):
        raise SingularParameterError(f"lambda={idx} gives a singular Legendre curve")
    return int(hasse_residues(spec)[idx])


@lru_cache(maxsize=8)
def _hasse_residues_cached(spec):
    t = field_tables(spec)
    p = spec.p
    h = kernels.horner_all(hasse_polynomial(p).coeffs, t.log, t.exp, p, spec.n)
    if spec.n == 1:
        sign = -1 if (p - 1) // 2 % 2 else 1
        res = (sign * h) % p
    else:
        # the sign disappears under the norm since p + 1 is even
        res = t.pow(h, p + 1)
    res.setflags(write=False)
    return res


def hasse_residues(spec):
    """Trace residue t mod p of E_lam for every lambda index of F_p or F_{p^2}."""
    if spec.n not in (1, 2):
        raise ValueError("Hasse residues are defined here for q = p or p^2")
    return _hasse_residues_cached(spec)

