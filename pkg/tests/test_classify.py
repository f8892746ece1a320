import itertools
import random

import mpmath
import numpy as np
import pytest
from sympy import primerange

from legquartic.classify import (
    admissible_group_orders,
    admissible_traces,
    bounds,
    char3_guaranteed_gap,
    floor_two_sqrt,
    golden_fraction_test,
    hws_bound,
    legendre_achievable,
    legendre_parameter,
    nq1,
    nq2,
    prime_power,
    square_exception,
)
from legquartic.curves import legendre_count, legendre_sums
from legquartic.errors import EvenCharacteristicError, NonDistinctError, NotPrimePowerError
from legquartic.finite_field import field_tables, make_field

from conftest import all_cubic_counts, field_of, odd_prime_powers


@pytest.mark.parametrize("q,m", [(9, 6), (7, 5), (243, 31), (1, 2), (4, 4)])
def test_floor_two_sqrt(q, m):
    assert floor_two_sqrt(q) == m


def test_floor_two_sqrt_bracket():
    for q in list(range(1, 5000)) + [10**12 + 39, 2**61 - 1]:
        m = floor_two_sqrt(q)
        assert m * m <= 4 * q < (m + 1) ** 2


def test_hws_examples():
    assert hws_bound(9, 3) == 28
    assert hws_bound(7, 3) == 23
    assert hws_bound(101, 0) == 102


def test_nq1_examples():
    assert nq1(128) == 150
    assert nq1(243) == 275
    assert nq1(5) == 10


def test_nq2_examples():
    assert nq2(9) == 20
    assert nq2(4) == 10
    assert nq2(5) == 12


def test_bounds_record():
    rec = bounds(9)
    assert rec.to_dict()["hws_g3"] == 28
    assert (rec.m, rec.nq1, rec.nq2) == (6, 16, 20)


def test_prime_power_rejects():
    for q in (1, 6, 12, 100):
        with pytest.raises(NotPrimePowerError):
            prime_power(q)
    with pytest.raises(NotPrimePowerError):
        nq1(15)


def _golden_mp(q, m):
    with mpmath.workdps(60):
        return 2 * mpmath.sqrt(q) - m >= (mpmath.sqrt(5) - 1) / 2


def test_golden_test_matches_high_precision():
    rng = random.Random(3)
    qs = [q for q in range(2, 20000) if floor_two_sqrt(q) ** 2 != 4 * q]
    qs += [rng.randrange(10**6, 10**15) for _ in range(3000)]
    for q in qs:
        m = floor_two_sqrt(q)
        if m * m == 4 * q:
            continue
        assert golden_fraction_test(q, m) == _golden_mp(q, m), q


def test_golden_test_near_threshold():
    # q with 2 sqrt(q) - m closest to the threshold among q < 10^6
    with mpmath.workdps(40):
        thr = (mpmath.sqrt(5) - 1) / 2
        near = sorted(range(2, 10**6, 7), key=lambda q: abs(2 * mpmath.sqrt(q) - floor_two_sqrt(q) - thr))[:50]
    for q in near:
        assert golden_fraction_test(q, floor_two_sqrt(q)) == _golden_mp(q, floor_two_sqrt(q))


@pytest.mark.slow
def test_bounds_total_up_to_1e6():
    qs = [2**k for k in range(1, 20)] + odd_prime_powers(10**6)
    for q in qs:
        b1, b2 = nq1(q), nq2(q)
        assert b1 <= hws_bound(q, 1)
        assert b2 <= hws_bound(q, 2)
        assert b2 >= b1


@pytest.mark.parametrize("q", [q for q in odd_prime_powers(49)])
def test_admissible_orders_match_all_weierstrass_curves(q):
    assert set(all_cubic_counts(field_of(q))) == admissible_group_orders(q)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_nq1_matches_exhaustive_maximum(q):
    assert max(all_cubic_counts(field_of(q))) == nq1(q)


def test_admissible_examples():
    assert admissible_group_orders(9) == set(range(4, 17))
    assert admissible_group_orders(7) == set(range(3, 14))
    assert 272 in admissible_group_orders(243)
    assert {27, -27} <= admissible_traces(243)


def test_admissible_rejects_even():
    with pytest.raises(EvenCharacteristicError):
        admissible_traces(8)


def test_square_exception_sign():
    assert square_exception(9) == 4
    assert square_exception(25) == 36
    assert square_exception(49) == 36
    assert square_exception(81) == 100
    assert square_exception(7) is None


@pytest.mark.parametrize("q,n,ok,reason", [
    (25, 36, False, "square-exception"),
    (9, 4, False, "square-exception"),
    (13, 8, True, "ok"),
    (13, 10, False, "not-mult-4"),
    (13, 24, False, "outside-hasse"),
    (25, 16, True, "ok"),
    (81, 76, False, "trace-inadmissible"),  # t = 6
])
def test_achievable_examples(q, n, ok, reason):
    v = legendre_achievable(q, n)
    assert (v.achievable, v.reason) == (ok, reason)
    assert v.to_dict()["target_count"] == n


@pytest.mark.parametrize("q", [9, 25, 49, 81])
def test_signed_exception_agrees_with_sweep(q):
    spec = field_of(q)
    counts = set((q + 1 + legendre_sums(spec)[2:]).tolist())
    assert square_exception(q) not in counts
    m = floor_two_sqrt(q)
    wanted = {n for n in range(q + 1 - m, q + 2 + m) if legendre_achievable(q, n).achievable}
    assert counts == wanted


def _cubic_count(spec, a, b, c):
    t = field_tables(spec)
    xs = np.arange(spec.q, dtype=np.int64)
    v = t.mul(t.mul(t.sub(xs, a), t.sub(xs, b)), t.sub(xs, c))
    return spec.q + 1 + int(t.chi[v].astype(np.int64).sum())


def test_legendre_parameter_examples():
    f7 = make_field(7)
    assert legendre_parameter(f7, 0, 1, 3) == 3
    f5 = make_field(5)
    lam = legendre_parameter(f5, 0, 2, 3)
    assert lam is not None
    assert legendre_count(f5, lam) == _cubic_count(f5, 0, 2, 3)
    with pytest.raises(NonDistinctError):
        legendre_parameter(f5, 1, 1, 2)


@pytest.mark.parametrize("q", odd_prime_powers(81))
def test_legendre_parameter_count_property(q):
    spec = field_of(q)
    t = field_tables(spec)
    if q <= 27:
        triples = list(itertools.combinations(range(q), 3))
    else:
        rng = random.Random(q)
        triples = [tuple(rng.sample(range(q), 3)) for _ in range(1000)]
    for a, b, c in triples:
        lam = legendre_parameter(spec, a, b, c)
        diffs = [int(t.sub(u, v)) for u, v in itertools.permutations((a, b, c), 2)]
        if lam is None:
            assert all(t.chi[d] == -1 for d in diffs)
        else:
            assert legendre_count(spec, lam) == _cubic_count(spec, a, b, c)
    for lam in range(2, q):
        assert legendre_count(spec, legendre_parameter(spec, 0, 1, lam)) == legendre_count(spec, lam)


def test_char3_gap_values():
    assert [char3_guaranteed_gap(n) for n in range(1, 9)] == [21, 0, 21, 12, 21, 0, 21, 12]


def test_primes_with_exception_are_squares_only():
    for p in primerange(3, 200):
        assert square_exception(p) is None
        assert square_exception(p * p) in (p * p + 1 + 2 * p, p * p + 1 - 2 * p)
