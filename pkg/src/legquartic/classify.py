"""Closed-form point-count bounds and achievability predicates.

All arithmetic is on Python integers; nothing here touches floating point.
"""

from dataclasses import asdict, dataclass
from itertools import permutations
from math import gcd, isqrt

from sympy import factorint

from .errors import EvenCharacteristicError, NonDistinctError, NotPrimePowerError
from .finite_field import as_index, field_tables


@dataclass(frozen=True)
class BoundsRecord:
    q: int
    m: int
    hws_g3: int
    nq1: int
    nq2: int
    genus: int = 3
    hws: int = 0

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class AchievabilityVerdict:
    q: int
    target_count: int
    achievable: bool
    reason: str

    def to_dict(self):
        return asdict(self)


def prime_power(q):
    """(p, n) with q = p**n, or NotPrimePowerError."""
    q = int(q)
    if q < 2:
        raise NotPrimePowerError(f"{q} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise NotPrimePowerError(f"{q} is not a prime power")
    (p, n), = f.items()
    return int(p), int(n)


def floor_two_sqrt(q):
    """[2 sqrt(q)], i.e. the integer square root of 4q."""
    return isqrt(4 * q)


def hws_bound(q, g):
    return q + 1 + g * floor_two_sqrt(q)


def nq1(q):
    """Maximal number of points on an elliptic curve over F_q."""
    p, n = prime_power(q)
    m = floor_two_sqrt(q)
    if n >= 3 and n % 2 == 1 and m % p == 0:
        return q + m
    return q + 1 + m


def _special_form(q):
    """q = k^2 + 1, k^2 + k + 1 or k^2 + k + 2 for some integer k >= 0."""
    k = isqrt(q - 1)
    if k * k + 1 == q:
        return True
    for c in (1, 2):
        disc = 4 * (q - c) + 1
        if disc < 0:
            continue
        r = isqrt(disc)
        if r * r == disc and (r - 1) % 2 == 0:
            return True
    return False


def golden_fraction_test(q, m):
    """Exact test of  2 sqrt(q) - m >= (sqrt(5) - 1)/2  for non-square q.

    With D = 2m - 1 > 0 the inequality reads 4 sqrt(q) - D >= sqrt(5). The
    left side is positive (4 sqrt(q) >= 2m), so squaring is monotone:
        16q + D^2 - 5 >= 8 D sqrt(q).
    If the left side is negative the test fails; otherwise square again:
        (16q + D^2 - 5)^2 >= 64 q D^2.
    Equality would make sqrt(q) rational, impossible for non-square q.
    """
    d = 2 * m - 1
    lhs = 16 * q + d * d - 5
    if lhs < 0:
        return False
    return lhs * lhs >= 64 * q * d * d


def nq2(q):
    """Maximal number of points on a genus-2 curve over F_q (Serre's formula)."""
    p, n = prime_power(q)
    m = floor_two_sqrt(q)
    if q == 4:
        return 10
    if q == 9:
        return 20
    if n % 2 == 0:
        return q + 1 + 2 * m
    if m % p != 0 and not _special_form(q):
        return q + 1 + 2 * m
    if golden_fraction_test(q, m):
        return q + 2 * m
    return q + 2 * m - 1


def bounds(q, genus=3):
    m = floor_two_sqrt(q)
    return BoundsRecord(q=q, m=m, hws_g3=hws_bound(q, 3), nq1=nq1(q), nq2=nq2(q),
                        genus=genus, hws=hws_bound(q, genus))


def admissible_traces(q):
    """Frobenius traces of elliptic curves over F_q, q odd (Deuring-Waterhouse)."""
    p, n = prime_power(q)
    if p == 2:
        raise EvenCharacteristicError("only odd q is supported")
    m = floor_two_sqrt(q)
    traces = {t for t in range(-m, m + 1) if t % p != 0}
    if n % 2 == 0:
        r = p ** (n // 2)
        traces |= {2 * r, -2 * r}
        if p % 3 != 1:
            traces |= {r, -r}
        if p % 4 != 1:
            traces.add(0)
    else:
        traces.add(0)
        if p == 3:
            s = 3 ** ((n + 1) // 2)
            traces |= {s, -s}
    return traces


def admissible_group_orders(q):
    return {q + 1 - t for t in admissible_traces(q)}


def square_exception(q):
    """q + 1 + 2r for the signed square root r = 1 mod 4 of q, if q is a square."""
    s = isqrt(q)
    if s * s != q:
        return None
    r = s if s % 4 == 1 else -s
    return q + 1 + 2 * r


def legendre_achievable(q, target):
    """Does some Legendre curve E_lambda over F_q have `target` points?"""
    m = floor_two_sqrt(q)
    target = int(target)

    def verdict(reason):
        return AchievabilityVerdict(q, target, reason == "ok", reason)

    if target % 4 != 0:
        return verdict("not-mult-4")
    if abs(q + 1 - target) > m:
        return verdict("outside-hasse")
    if q + 1 - target not in admissible_traces(q):
        return verdict("trace-inadmissible")
    if target == square_exception(q):
        return verdict("square-exception")
    return verdict("ok")


def legendre_parameter(spec, a, b, c):
    """Legendre parameter of y^2 = (x-a)(x-b)(x-c), if the curve is Legendre over F_q.

    Orderings (u, v, w) of the three roots are tried in lexicographic order of
    their canonical indices; the first with u - v a nonzero square gives
    lambda = (w - v)/(u - v) via x -> (x - v)/(u - v).
    """
    roots = sorted(as_index(spec, r) for r in (a, b, c))
    if len(set(roots)) != 3:
        raise NonDistinctError("roots must be pairwise distinct")
    t = field_tables(spec)
    for u, v, w in permutations(roots):
        d = int(t.sub(u, v))
        if t.chi[d] == 1:
            return int(t.div(t.sub(w, v), d))
    return None


def char3_guaranteed_gap(n):
    if n % 2 == 1:
        return 21
    return 0 if n % 4 == 2 else 12
