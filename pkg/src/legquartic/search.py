"""Sweeps over the family C_lambda: best curve, survey of attained counts,
lambda search by target count, and the N_q(3) / characteristic-3 tables.

All sweeps go through :func:`legquartic.curves.family_counts`, which may be
split across worker threads; every result here is independent of that split.
Ties are always broken by the smallest canonical lambda index.
"""

from dataclasses import asdict, dataclass, field

import numpy as np

from . import curves
from .classify import (
    admissible_group_orders,
    admissible_traces,
    char3_guaranteed_gap,
    floor_two_sqrt,
    hws_bound,
    legendre_achievable,
    prime_power,
)
from .curves import family_counts, minus_three, shift
from .errors import (
    EvenCharacteristicError,
    MethodUnavailableError,
    SweepCapExceededError,
    TargetNotMultipleOf4Error,
)
from .finite_field import field_tables, make_field
from .poly_fp import PolyFp, hasse_polynomial, hasse_residues, poly_roots, poly_sub

SWEEP_CAP = 2**16
HASSE_PRIME_CAP = 2 * 10**4

# N_q(3) for odd q; lower bounds where the exact value is not known
KNOWN_NQ3 = {3: 10, 5: 16, 7: 20, 9: 28, 11: 28, 13: 32, 17: 40, 19: 44, 23: 48,
             25: 56, 27: 56, 29: 60}
KNOWN_NQ3_LOWER = {31: 56, 37: 68, 41: 72}


@dataclass(frozen=True)
class BestCurveRecord:
    q: int
    best_lambda: int
    elliptic_count: int
    quartic_count_predicted: int
    hws_gap: int

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class SurveyReport:
    q: int
    achieved: tuple
    missing: tuple
    tags: tuple
    witnesses: dict = field(compare=False, repr=False)

    def to_dict(self):
        return {
            "q": self.q,
            "achieved": list(self.achieved),
            "missing": list(self.missing),
            "tags": list(self.tags),
            "witnesses": {str(k): v for k, v in sorted(self.witnesses.items())},
        }

    def csv_row(self):
        return "{},{},{},{}".format(
            self.q,
            len(self.missing),
            ";".join(str(v) for v in self.missing),
            ";".join(self.tags),
        )


CSV_HEADER = "q,missing_count,missing_values,tags"


def _check_sweep(spec, cap):
    cap = SWEEP_CAP if cap is None else cap
    if spec.q > cap:
        raise SweepCapExceededError(f"sweep needs q <= {cap}, got q={spec.q}")


def valid_lambdas(spec):
    excluded = {0, 1, minus_three(spec)}
    return [lam for lam in range(spec.q) if lam not in excluded]


def hasse_multiples_of_4(q):
    """All N = 0 mod 4 with |q + 1 - N| <= [2 sqrt q], ascending."""
    m = floor_two_sqrt(q)
    lo = q + 1 - m
    first = lo + (-lo) % 4
    return list(range(first, q + 1 + m + 1, 4))


def survey_universe(q):
    """Group orders N = 0 mod 4 that some elliptic curve over F_q has, ascending.

    Counts whose trace is divisible by p (outside the supersingular cases)
    occur for no curve at all, so they are never reported as missing.
    """
    return sorted(n for n in admissible_group_orders(q) if n % 4 == 0)


def _masked_counts(spec, workers, cap):
    _check_sweep(spec, cap)
    counts = family_counts(spec, workers=workers)
    valid = np.ones(spec.q, dtype=bool)
    valid[[0, 1, minus_three(spec)]] = False
    return counts, valid


def best_curve(spec, workers=1, cap=None):
    """The lambda maximizing #E^(lambda+3)_lambda, hence #C_lambda."""
    counts, valid = _masked_counts(spec, workers, cap)
    if not valid.any():
        raise ValueError(f"no admissible lambda over {spec}")
    best = int(np.argmax(np.where(valid, counts, -1)))
    ell = int(counts[best])
    quartic = 3 * ell - 2 * spec.q - 2
    return BestCurveRecord(spec.q, best, ell, quartic, hws_bound(spec.q, 3) - quartic)


def family_extremes(spec, workers=1, cap=None):
    """(max, min) of the predicted quartic count over all admissible lambda."""
    counts, valid = _masked_counts(spec, workers, cap)
    vals = counts[valid]
    return 3 * int(vals.max()) - 2 * spec.q - 2, 3 * int(vals.min()) - 2 * spec.q - 2


def family_survey(spec, workers=1, cap=None):
    """Which admissible N = 0 mod 4 occur as #E^(lambda+3)_lambda.

    Missing values are tagged max/min when they are the largest/smallest
    element of :func:`survey_universe`, interior otherwise.
    """
    counts, valid = _masked_counts(spec, workers, cap)
    witnesses = {}
    lams = np.flatnonzero(valid)
    vals, first = np.unique(counts[lams], return_index=True)
    for v, i in zip(vals.tolist(), first.tolist()):
        witnesses[int(v)] = int(lams[i])
    interval = survey_universe(spec.q)
    achieved = tuple(n for n in interval if n in witnesses)
    missing = tuple(n for n in interval if n not in witnesses)
    stray = set(witnesses) - set(interval)
    if stray:
        raise AssertionError(f"counts that no elliptic curve can have: {sorted(stray)}")
    tags = []
    for v in missing:
        if v == interval[-1]:
            tags.append("max")
        elif v == interval[0]:
            tags.append("min")
        else:
            tags.append("interior")
    return SurveyReport(spec.q, achieved, missing, tuple(tags), witnesses)


def _hasse_candidates(spec, t, seed):
    """lambda with t_lambda = chi(lambda+3) * t (mod p), where t_lambda is
    the trace of the untwisted E_lambda."""
    p = spec.p
    tab = field_tables(spec)
    found = set()
    for s in (1, -1):
        target = (s * t) % p
        if spec.n == 1:
            sign = -1 if (p - 1) // 2 % 2 else 1
            h = hasse_polynomial(p)
            # sign * H(l) = s*t  <=>  H(l) - sign*s*t = 0
            f = poly_sub(h, PolyFp.of(p, [sign * target]))
            cands = poly_roots(f, seed) if f.coeffs else range(p)
        else:
            cands = np.flatnonzero(hasse_residues(spec) == target).tolist()
        for lam in cands:
            if lam in (0, 1) or lam == minus_three(spec):
                continue
            if tab.chi[shift(spec, lam, 3)] == s:
                found.add(int(lam))
    return sorted(found)


def find_lambda(spec, target, method="naive", seed=0, workers=1, cap=None):
    """Smallest-index lambda with #E^(lambda+3)_lambda = target, or None."""
    target = int(target)
    if target % 4 != 0:
        raise TargetNotMultipleOf4Error(f"target {target} is not a multiple of 4")
    if method == "naive":
        counts, valid = _masked_counts(spec, workers, cap)
        hits = np.flatnonzero(valid & (counts == target))
        return int(hits[0]) if hits.size else None
    if method != "hasse":
        raise ValueError(f"unknown method {method!r}")
    if spec.n > 2:
        raise MethodUnavailableError("the Hasse method needs q = p or q = p^2")
    if spec.n == 1 and spec.p > HASSE_PRIME_CAP:
        raise SweepCapExceededError(f"Hasse root finding capped at p <= {HASSE_PRIME_CAP}")
    if spec.n == 2:
        _check_sweep(spec, cap)
    q = spec.q
    if abs(q + 1 - target) > floor_two_sqrt(q):
        return None
    t = q + 1 - target
    # t mod p plus the Hasse bound only narrows t down; confirm every
    # candidate with an exact count
    for lam in _hasse_candidates(spec, t, seed):
        if curves.family_twisted_count(spec, lam) == target:
            return lam
    return None


def nq3_lower_table(q_list, workers=1, cap=None):
    rows = []
    for q in q_list:
        p, n = prime_power(q)
        if p == 2:
            raise EvenCharacteristicError("even q is out of scope")
        rec = best_curve(make_field(p, n), workers=workers, cap=cap)
        if q in KNOWN_NQ3:
            known, kind = KNOWN_NQ3[q], "exact"
        elif q in KNOWN_NQ3_LOWER:
            known, kind = KNOWN_NQ3_LOWER[q], "lower"
        else:
            known, kind = None, None
        rows.append({
            "q": q,
            "family_best": rec.quartic_count_predicted,
            "best_lambda": rec.best_lambda,
            "known_value": known,
            "known_kind": kind,
            "gap_to_hws": rec.hws_gap,
        })
    return rows


def char3_proof_count(n):
    """The quartic count the characteristic-3 existence argument guarantees."""
    q = 3**n
    m = floor_two_sqrt(q)
    if n % 2 == 1:
        big_n = (q + 1 + m) // 4 * 4
        # N = 1 mod 3 means 3 | t; step down unless t is one of the
        # supersingular traces (this only happens at n = 1, where t = 0)
        if big_n % 3 == 1 and q + 1 - big_n not in admissible_traces(q):
            big_n -= 4
    elif n % 4 == 2:
        big_n = q + 1 + m
    else:
        big_n = q + 1 + m - 4
    return big_n, 3 * big_n - 2 * q - 2


def char3_verify(n_max, workers=1, cap=None):
    if n_max > 8 and cap is None:
        raise SweepCapExceededError("char3 verification is capped at n <= 8")
    rows = []
    for n in range(1, n_max + 1):
        q = 3**n
        rec = best_curve(make_field(3, n), workers=workers, cap=cap)
        elliptic, proof_count = char3_proof_count(n)
        hws = hws_bound(q, 3)
        rows.append({
            "n": n,
            "q": q,
            "hws": hws,
            "family_best": rec.quartic_count_predicted,
            "best_lambda": rec.best_lambda,
            "gap": hws - rec.quartic_count_predicted,
            "guaranteed_gap": char3_guaranteed_gap(n),
            "proof_elliptic_count": elliptic,
            "proof_count": proof_count,
            "proof_count_achievable": legendre_achievable(q, elliptic).achievable,
        })
    return rows
