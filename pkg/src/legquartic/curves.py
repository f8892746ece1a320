"""Point counts of Legendre curves, their quadratic twists and the quartics C_lambda.

E_lambda : y^2 = x(x-1)(x-lambda)
E^(d)    : d*y^2 = x(x-1)(x-lambda)
C_lambda : x^4 + y^4 + z^4 = (lambda+1)(x^2y^2 + y^2z^2 + z^2x^2)

Elliptic counts use the character sum #E = q + 1 + sum_x chi(x(x-1)(x-lambda)),
taken from the precomputed chi table. Quartic counts are a brute-force sweep
of P^2(F_q) and serve as an independent check on the identity
#C = 3 #E^(lambda+3) - 2q - 2.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import kernels
from .finite_field import as_index, field_tables
from .errors import SingularParameterError, SweepCapExceededError, ZeroTwistError

QUARTIC_CAP = 2**13


@dataclass(frozen=True)
class CurveCount:
    q: int
    lambda_index: int
    twist_index: int
    count: int
    trace: int
    curve: str = "legendre"

    def to_dict(self):
        return {
            "curve": self.curve,
            "q": self.q,
            "lambda": self.lambda_index,
            "twist": self.twist_index,
            "count": self.count,
            "trace": self.trace,
        }


def shift(spec, idx, k):
    """Index of idx + k, for an integer k mapped into the prime subfield."""
    d0 = idx % spec.p
    return idx - d0 + (d0 + k) % spec.p


def minus_three(spec):
    return (-3) % spec.p


def _check_lambda(spec, lam, quartic=False):
    lam = as_index(spec, lam)
    if lam in (0, 1):
        raise SingularParameterError(f"lambda={lam} gives a singular Legendre curve")
    if quartic and lam == minus_three(spec):
        raise SingularParameterError("lambda=-3 gives a singular quartic")
    return lam


def frobenius_trace(q, count):
    return q + 1 - count


def _chunks(lo, hi, workers):
    workers = max(1, int(workers))
    size = hi - lo
    bounds = [lo + (size * i) // workers for i in range(workers + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if b > a]


def character_weights(spec):
    """u[x] = chi(x) * chi(x - 1), the lambda-independent part of the sum."""
    t = field_tables(spec)
    xs = np.arange(spec.q, dtype=np.int64)
    return (t.chi * t.chi[t.add_int(xs, -1)]).astype(np.int8)


def legendre_sums(spec, lo=0, hi=None, workers=1, backend=None):
    """sum_x chi(x(x-1)(x-lam)) for lam in [lo, hi), split over worker threads."""
    t = field_tables(spec)
    hi = spec.q if hi is None else hi
    u = character_weights(spec)

    def run(bounds):
        return kernels.char_correlation(u, t.chi, spec.p, spec.n, bounds[0], bounds[1], backend)

    parts = _chunks(lo, hi, workers)
    if len(parts) <= 1:
        return np.concatenate([run(b) for b in parts]) if parts else np.zeros(0, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        return np.concatenate(list(pool.map(run, parts)))


def legendre_count(spec, lam):
    lam = _check_lambda(spec, lam)
    return spec.q + 1 + int(legendre_sums(spec, lam, lam + 1)[0])


def twist_count(spec, count, d):
    """Count of the twist by d of a curve with `count` points."""
    d = as_index(spec, d)
    if d == 0:
        raise ZeroTwistError("twist by zero")
    if field_tables(spec).chi[d] == 1:
        return count
    return 2 * spec.q + 2 - count


def twisted_count(spec, lam, d):
    lam = _check_lambda(spec, lam)
    d = as_index(spec, d)
    if d == 0:
        raise ZeroTwistError("twist by zero")
    return twist_count(spec, legendre_count(spec, lam), d)


def family_twisted_count(spec, lam):
    """#E^(lambda+3)_lambda; lambda = -3 is excluded."""
    lam = _check_lambda(spec, lam, quartic=True)
    return twisted_count(spec, lam, shift(spec, lam, 3))


def predicted_quartic_count(spec, lam):
    return 3 * family_twisted_count(spec, lam) - 2 * spec.q - 2


def _check_quartic_cap(spec, cap):
    cap = QUARTIC_CAP if cap is None else cap
    if spec.q > cap:
        raise SweepCapExceededError(f"quartic sweep needs q <= {cap}, got q={spec.q}")


def _quartic_tables(spec):
    t = field_tables(spec)
    xs = np.arange(spec.q, dtype=np.int64)
    return t, t.pow(xs, 2), t.pow(xs, 4)


def quartic_count(spec, lam, cap=None, backend=None):
    """Projective F_q-points of C_lambda by sweeping all of P^2."""
    lam = _check_lambda(spec, lam, quartic=True)
    _check_quartic_cap(spec, cap)
    t, sq, fourth = _quartic_tables(spec)
    c = shift(spec, lam, 1)
    return kernels.quartic_count(c, sq, fourth, t.log, t.exp, spec.p, spec.n, backend)


def quartic_counts_all(spec, cap=None, backend=None):
    """Brute-force #C_lambda(F_q) for every lambda at once, indexed by lambda.

    Entries for the excluded lambda in {0, 1, -3} are 0.
    """
    _check_quartic_cap(spec, cap)
    t, sq, fourth = _quartic_tables(spec)
    buckets, universal = kernels.quartic_buckets(sq, fourth, t.log, t.exp, spec.p, spec.n, backend)
    lams = np.arange(spec.q, dtype=np.int64)
    counts = buckets[t.add_int(lams, 1)] + universal
    counts[[0, 1, minus_three(spec)]] = 0
    return counts


def family_counts(spec, workers=1, backend=None):
    """#E^(lambda+3)_lambda for every lambda index; 0 at the excluded lambda."""
    t = field_tables(spec)
    q = spec.q
    counts = q + 1 + legendre_sums(spec, workers=workers, backend=backend)
    lams = np.arange(q, dtype=np.int64)
    twist = t.chi[t.add_int(lams, 3)]
    counts = np.where(twist == 1, counts, 2 * q + 2 - counts)
    counts[[0, 1, minus_three(spec)]] = 0
    return counts


def count_record(spec, curve, lam, twist=None):
    """CurveCount for curve in {legendre, twisted, quartic}."""
    lam_idx = as_index(spec, lam)
    if curve == "legendre":
        count = legendre_count(spec, lam_idx)
        return CurveCount(spec.q, lam_idx, 1, count, frobenius_trace(spec.q, count), curve)
    if curve == "twisted":
        d = shift(spec, lam_idx, 3) if twist is None else as_index(spec, twist)
        count = twisted_count(spec, lam_idx, d)
        return CurveCount(spec.q, lam_idx, d, count, frobenius_trace(spec.q, count), curve)
    if curve == "quartic":
        count = quartic_count(spec, lam_idx)
        return CurveCount(spec.q, lam_idx, shift(spec, lam_idx, 3), count,
                          frobenius_trace(spec.q, count), curve)
    raise ValueError(f"unknown curve kind {curve!r}")
