import random
from math import comb

import pytest
from sympy import primerange

from legquartic.curves import legendre_count
from legquartic.errors import SingularParameterError, ZeroModulusError
from legquartic.finite_field import FieldElement, make_field
from legquartic.poly_fp import (
    PolyFp,
    hasse_polynomial,
    hasse_trace_residue,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_mulmod,
    poly_powmod,
    poly_roots,
)


@pytest.mark.parametrize("p,coeffs", [(3, (1, 1)), (5, (1, 4, 1)), (7, (1, 2, 2, 1))])
def test_hasse_polynomial_small(p, coeffs):
    assert hasse_polynomial(p).coeffs == coeffs


@pytest.mark.parametrize("p", list(primerange(3, 500)))
def test_hasse_recursion_matches_binomials(p):
    h = (p - 1) // 2
    assert hasse_polynomial(p).coeffs == tuple(comb(h, i) ** 2 % p for i in range(h + 1))


def test_hasse_degree_and_palindrome_up_to_1e4():
    for p in primerange(3, 10**4):
        c = hasse_polynomial(p).coeffs
        assert len(c) - 1 == (p - 1) // 2
        assert c == c[::-1]


def test_mulmod_example():
    assert poly_mulmod(PolyFp.of(3, [1, 1]), PolyFp.of(3, [1, 1]), PolyFp.of(3, [0, 0, 1])).coeffs == (1, 2)


def test_gcd_is_monic():
    assert poly_gcd(PolyFp.of(5, [-1, 0, 1]), PolyFp.of(5, [-1, 1])).coeffs == (4, 1)
    assert poly_gcd(PolyFp.of(5, [2, 4]), PolyFp.of(5, [])).coeffs == (3, 1)


def test_powmod_agrees_with_repeated_multiplication():
    p = 11
    m = PolyFp.of(p, [3, 0, 5, 1, 2])
    x = PolyFp.of(p, [0, 1])
    acc = PolyFp.of(p, [1])
    for e in range(40):
        assert poly_powmod(x, e, m) == acc
        acc = poly_mulmod(acc, x, m)


def test_divmod_reconstructs():
    rng = random.Random(7)
    for p in (3, 7, 101):
        for _ in range(30):
            a = PolyFp.of(p, [rng.randrange(p) for _ in range(rng.randrange(1, 120))])
            b = PolyFp.of(p, [rng.randrange(p) for _ in range(rng.randrange(1, 70))] + [1])
            quo, rem = poly_divmod(a, b)
            assert rem.degree < b.degree
            back = poly_mul(quo, b)
            from legquartic.poly_fp import poly_add
            assert poly_add(back, rem) == a


def test_zero_modulus():
    with pytest.raises(ZeroModulusError):
        poly_mulmod(PolyFp.of(5, [1]), PolyFp.of(5, [1]), PolyFp.of(5, []))


@pytest.mark.parametrize("p,coeffs,roots", [
    (3, [1, 1], {2}),
    (5, [1, 4, 1], set()),
    (7, [-1, 0, 1], {1, 6}),
])
def test_roots_examples(p, coeffs, roots):
    assert poly_roots(PolyFp.of(p, coeffs)) == roots


@pytest.mark.parametrize("p", list(primerange(3, 500)))
def test_roots_match_exhaustive_evaluation(p):
    rng = random.Random(p)
    for trial in range(4):
        if trial % 2:
            # product of linear factors, some repeated, times a random factor
            f = PolyFp.of(p, [1])
            for _ in range(rng.randrange(1, 8)):
                f = poly_mul(f, PolyFp.of(p, [rng.randrange(p), 1]))
            f = poly_mul(f, PolyFp.of(p, [rng.randrange(p) for _ in range(4)] + [1]))
        else:
            f = PolyFp.of(p, [rng.randrange(p) for _ in range(rng.randrange(1, 30))] + [1])
        expected = {x for x in range(p) if f(x) == 0}
        assert poly_roots(f, seed=trial) == expected
        assert poly_roots(f, seed=trial + 1000) == expected


def test_residue_examples():
    assert hasse_trace_residue(7, 1, 3) == 4
    assert hasse_trace_residue(3, 1, 2) == 0
    assert hasse_trace_residue(5, 1, FieldElement((2,))) == 3


def test_residue_rejects_singular():
    with pytest.raises(SingularParameterError):
        hasse_trace_residue(7, 1, 1)


@pytest.mark.parametrize("p", list(primerange(3, 200)))
def test_residue_matches_character_sum_count(p):
    spec = make_field(p)
    for lam in range(2, p):
        assert hasse_trace_residue(p, 1, lam) == (p + 1 - legendre_count(spec, lam)) % p


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23])
def test_residue_over_fp2_matches_count(p):
    spec = make_field(p, 2)
    q = spec.q
    for lam in range(2, q):
        assert hasse_trace_residue(p, 1 + p, lam) == (q + 1 - legendre_count(spec, lam)) % p


@pytest.mark.parametrize("p", list(primerange(5, 200)))
def test_supersingular_parameters_are_hasse_roots(p):
    spec = make_field(p)
    roots = poly_roots(hasse_polynomial(p))
    supersingular = {lam for lam in range(2, p) if legendre_count(spec, lam) == p + 1}
    assert roots == supersingular
