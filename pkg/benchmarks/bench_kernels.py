"""Numba vs pure-numpy timings for the sweep kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Both backends are imported in one process; the kernels are selected with the
``backend`` argument, so LEGQUARTIC_NO_JIT is not needed here. The first
numba call of each kernel is made before timing (JIT warm-up).
"""

import argparse
import time

import numpy as np

from legquartic import _jit
from legquartic.curves import legendre_sums, quartic_counts_all
from legquartic.finite_field import field_tables, make_field
from legquartic import kernels
from legquartic.poly_fp import hasse_polynomial


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(quick):
    fields = [(1009, 1), (3, 8), (10007, 1), (11, 4)]
    quartic = [(7, 2), (3, 5)]
    horner = [(10007, 1), (101, 2)]
    if quick:
        fields, quartic, horner = fields[:2], quartic[:1], horner[:1]
    for p, n in fields:
        spec = make_field(p, n)
        yield f"legendre sweep  q={spec.q}", lambda b, s=spec: legendre_sums(s, backend=b)
    for p, n in quartic:
        spec = make_field(p, n)
        yield f"quartic brute   q={spec.q}", lambda b, s=spec: quartic_counts_all(s, backend=b)
    for p, n in horner:
        spec = make_field(p, n)
        t = field_tables(spec)
        coeffs = hasse_polynomial(p).coeffs
        yield (f"hasse eval      q={spec.q}",
               lambda b, s=spec, t=t, c=coeffs: kernels.horner_all(c, t.log, t.exp, s.p, s.n, b))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    if not _jit.HAVE_NUMBA:
        raise SystemExit("numba is unavailable (or LEGQUARTIC_NO_JIT is set); nothing to compare")

    print(f"{'kernel':<26}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for label, fn in cases(args.quick):
        fn("numba")  # compile
        tj, a = _time(lambda: fn("numba"), args.repeat)
        tn, b = _time(lambda: fn("numpy"), args.repeat)
        assert np.array_equal(np.asarray(a), np.asarray(b)), label
        print(f"{label:<26}{tj:>10.4f}{tn:>10.4f}{tn / tj:>8.1f}x")


if __name__ == "__main__":
    main()
