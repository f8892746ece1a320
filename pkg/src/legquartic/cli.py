"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (the error class name is
printed on stderr), 2 on a usage error. Field elements are read and printed
as canonical indices.
"""

import argparse
import csv
import io
import json
import os
import sys

from . import classify, curves, search
from .errors import DomainError
from .finite_field import FieldElement, field_for_q, index_of, make_field
from .poly_fp import hasse_polynomial


def _default_threads():
    env = os.environ.get("THREADS")
    if env:
        return int(env)
    return os.cpu_count() or 1


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _cap(text):
    v = int(text)
    if v < 3:
        raise argparse.ArgumentTypeError("caps must be >= 3")
    return v


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker threads for lambda sweeps (default: $THREADS or CPU count)")
    common.add_argument("--seed", type=int, default=0, help="seed for polynomial root splitting")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--sweep-cap", type=_cap, default=search.SWEEP_CAP)
    common.add_argument("--quartic-cap", type=_cap, default=curves.QUARTIC_CAP)

    parser = argparse.ArgumentParser(prog="legquartic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common], help="print the field model of F_{p^n}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, default=1)

    p = sub.add_parser("count", parents=[common], help="point count of one curve")
    p.add_argument("curve", choices=("legendre", "twisted", "quartic"))
    p.add_argument("--q", type=int, required=True)
    lam = p.add_mutually_exclusive_group(required=True)
    lam.add_argument("--lambda", dest="lam", type=int)
    lam.add_argument("--lambda-poly", type=_int_list,
                     help="coefficients of lambda, constant term first")
    p.add_argument("--twist", type=int, help="twist index d (default lambda+3)")

    p = sub.add_parser("best", parents=[common], help="best member of the family over F_q")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("survey", parents=[common], help="attained and missing family counts")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--q", type=int)
    grp.add_argument("--q-max", type=int)

    p = sub.add_parser("find", parents=[common], help="lambda with a given twisted count")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--method", choices=("naive", "hasse"), default="naive")

    p = sub.add_parser("table", parents=[common], help="reproduce a table")
    p.add_argument("which", choices=("nq3",))
    p.add_argument("--q-list", type=_int_list, required=True)

    p = sub.add_parser("char3", parents=[common], help="characteristic-3 gap verification")
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("bounds", parents=[common], help="closed-form bounds for F_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--genus", type=int, default=3)

    p = sub.add_parser("achievable", parents=[common], help="can a Legendre curve have N points")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--target", type=int, required=True)

    p = sub.add_parser("hasse-poly", parents=[common], help="coefficients of H_p")
    p.add_argument("--p", type=int, required=True)
    return parser


def odd_prime_powers(limit):
    from sympy import primerange

    out = []
    for p in primerange(3, limit + 1):
        k = p
        while k <= limit:
            out.append(k)
            k *= p
    return sorted(out)


def _cell(v):
    if isinstance(v, (list, tuple)):
        return ";".join(str(x) for x in v)
    if v is None:
        return ""
    return v


def _emit(out, records, fmt, single):
    if fmt == "json":
        payload = records[0] if single else records
        out.write(json.dumps(payload) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        keys = list(records[0]) if records else []
        writer.writerow(keys)
        for r in records:
            writer.writerow([_cell(r[k]) for k in keys])
        out.write(buf.getvalue())
    else:
        for r in records:
            out.write(" ".join(f"{k}={_cell(v)}" for k, v in r.items()) + "\n")


def _lambda_index(spec, args):
    if args.lam is not None:
        return args.lam
    coeffs = list(args.lambda_poly)
    if len(coeffs) > spec.n:
        raise DomainError(f"lambda has more than {spec.n} coefficients")
    coeffs += [0] * (spec.n - len(coeffs))
    return index_of(spec, FieldElement(tuple(c % spec.p for c in coeffs)))


def _run(args, out):
    threads = args.threads or _default_threads()
    cmd = args.command
    fmt = args.format

    if cmd == "field":
        _emit(out, [make_field(args.p, args.n).to_dict()], fmt, True)
    elif cmd == "count":
        spec = field_for_q(args.q)
        lam = _lambda_index(spec, args)
        if args.curve == "quartic":
            count = curves.quartic_count(spec, lam, cap=args.quartic_cap)
            rec = curves.CurveCount(spec.q, lam, curves.shift(spec, lam, 3), count,
                                    curves.frobenius_trace(spec.q, count), "quartic")
        else:
            rec = curves.count_record(spec, args.curve, lam, args.twist)
        _emit(out, [rec.to_dict()], fmt, True)
    elif cmd == "best":
        spec = field_for_q(args.q)
        rec = search.best_curve(spec, workers=threads, cap=args.sweep_cap)
        _emit(out, [rec.to_dict()], fmt, True)
    elif cmd == "survey":
        qs = [args.q] if args.q is not None else odd_prime_powers(args.q_max)
        reports = [search.family_survey(field_for_q(q), workers=threads, cap=args.sweep_cap)
                   for q in qs]
        if fmt == "csv":
            out.write(search.CSV_HEADER + "\n")
            for r in reports:
                out.write(r.csv_row() + "\n")
        else:
            _emit(out, [r.to_dict() for r in reports], fmt, args.q is not None)
    elif cmd == "find":
        spec = field_for_q(args.q)
        lam = search.find_lambda(spec, args.target, args.method, seed=args.seed,
                                 workers=threads, cap=args.sweep_cap)
        count = None if lam is None else curves.family_twisted_count(spec, lam)
        rec = {"q": spec.q, "target": args.target, "method": args.method,
               "lambda": lam, "count": count}
        _emit(out, [rec], fmt, True)
    elif cmd == "table":
        rows = search.nq3_lower_table(args.q_list, workers=threads, cap=args.sweep_cap)
        _emit(out, rows, fmt, False)
    elif cmd == "char3":
        cap = args.sweep_cap if args.n_max > 8 else None
        rows = search.char3_verify(args.n_max, workers=threads, cap=cap)
        _emit(out, rows, fmt, False)
    elif cmd == "bounds":
        classify.prime_power(args.q)
        _emit(out, [classify.bounds(args.q, args.genus).to_dict()], fmt, True)
    elif cmd == "achievable":
        classify.prime_power(args.q)
        _emit(out, [classify.legendre_achievable(args.q, args.target).to_dict()], fmt, True)
    elif cmd == "hasse-poly":
        h = hasse_polynomial(args.p)
        if fmt == "json":
            _emit(out, [{"p": h.p, "coeffs": list(h.coeffs)}], fmt, True)
        else:
            out.write(",".join(str(c) for c in h.coeffs) + "\n")


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _run(args, out)
    except DomainError as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run())
