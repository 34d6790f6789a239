"""
Command line front end.

Exit codes: 0 on success, 1 on malformed input, 2 when evaluation paths
disagree or a verified claim fails.  JSON output is key-sorted so repeated
invocations are byte-identical.
"""
import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .gw import METHODS, gw
from .polyring import expand_euler_product
from .quasimap import PathDisagreement, qm_intersection, w_invariant
from .toric import emit
from .verify import LEMMAS, verify_all, verify_lemma

EXIT_OK, EXIT_INPUT, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for disagreement here
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def rational_json(x):
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def rational_text(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2)


def _exps(text):
    try:
        vals = [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty exponent list")
    return vals


def cmd_gw(args, out):
    res = gw(args.N, args.k, args.d, args.a, args.b, method=args.method, jobs=args.jobs)
    q = res.query
    if args.format == "json":
        payload = {
            "query": {"N": q.N, "k": q.k, "d": q.d, "a": q.a, "b": q.b},
            "value": rational_json(res.value),
            "paths": {m: rational_json(v) for m, v in res.paths.items()},
            "consistent": res.consistent,
            "warning": res.warning,
        }
        out.write(_dump(payload) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "k", "d", "a", "b", "value"] + list(METHODS) + ["consistent"])
        w.writerow([q.N, q.k, q.d, q.a, q.b, rational_text(res.value)]
                   + [rational_text(res.paths[m]) if m in res.paths else "" for m in METHODS]
                   + [str(res.consistent).lower()])
        out.write(buf.getvalue())
    else:
        out.write(f"<h^{q.a}, h^{q.b}>_{{0,{q.d}}} on degree {q.k} in P^{q.N - 1} "
                  f"= {rational_text(res.value)}\n")
        for m, v in res.paths.items():
            out.write(f"  {m:<10} {rational_text(v)}\n")
        if res.warning:
            out.write(f"  warning: {res.warning}\n")
        if not res.consistent:
            out.write("  PATHS DISAGREE\n")
    return EXIT_OK if res.consistent else EXIT_FAIL


def cmd_ek(args, out):
    ell = expand_euler_product(args.k).ell
    if args.format == "json":
        out.write(_dump({"k": args.k, "ell": [str(x) for x in ell]}) + "\n")
    else:
        out.write(" ".join(str(x) for x in ell) + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    if args.all:
        reports = verify_all(args.max_n, jobs=args.jobs)
    else:
        if args.lemma is None or args.n is None:
            raise UsageError("verify needs --lemma ID --n N, or --all --max-n N")
        reports = [verify_lemma(args.lemma, args.n)]
    passed = all(r.passed for r in reports)
    if args.format == "json":
        out.write(_dump({"passed": passed, "reports": [r.to_dict() for r in reports]}) + "\n")
    else:
        for r in reports:
            for c in r.claims:
                mark = "PASS" if c.passed else "FAIL"
                extra = f"  [{c.detail}]" if c.detail and not c.passed else ""
                out.write(f"{mark} {r.lemma} n={r.n}: {c.name}{extra}\n")
        out.write(f"{'all claims pass' if passed else 'SOME CLAIMS FAIL'}\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_intersect(args, out):
    value = qm_intersection(args.N, args.d, args.exps, order=args.order)
    out.write(_dump({"N": args.N, "d": args.d, "exps": list(args.exps),
                     "value": rational_json(value)}) + "\n")
    return EXIT_OK


def cmd_w(args, out):
    value = w_invariant(args.N, args.k, args.d, args.a, args.b)
    out.write(_dump({"N": args.N, "k": args.k, "d": args.d, "a": args.a, "b": args.b,
                     "value": rational_json(value)}) + "\n")
    return EXIT_OK


def cmd_toric(args, out):
    out.write(_dump(emit(args.N, args.d)) + "\n")
    return EXIT_OK


def build_parser():
    p = _Parser(prog="gwcalc", description="Two-pointed genus-0 GW invariants of "
                "hypersurfaces in projective space, with the supporting Chow ring machinery.")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads for parallelizable sums (output does not depend on it)")
    # also accepted after the verb; the subparser default must not clobber the global one
    jobs = _Parser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    g = sub.add_parser("gw", parents=[jobs], help="GW invariant <O_{h^a} O_{h^b}>_{0,d}")
    for name in ("N", "k", "d", "a", "b"):
        g.add_argument(f"--{name}", type=int, required=True)
    g.add_argument("--method", choices=METHODS + ("all",), default="all")
    g.add_argument("--format", choices=("json", "csv", "text"), default="json")
    g.set_defaults(func=cmd_gw)

    e = sub.add_parser("ek", help="Euler coefficients ell_0^k .. ell_{k-1}^k")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--format", choices=("json", "text"), default="text")
    e.set_defaults(func=cmd_ek)

    v = sub.add_parser("verify", parents=[jobs], help="check relations and intersection tables")
    v.add_argument("--lemma", choices=tuple(LEMMAS))
    v.add_argument("--n", type=int)
    v.add_argument("--all", action="store_true")
    v.add_argument("--max-n", type=int, default=2)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("intersect", help="intersection numbers")
    isub = i.add_subparsers(dest="space", parser_class=_Parser)
    isub.required = True
    iq = isub.add_parser("quasimap", help="integral of H_0^a0 ... H_d^ad")
    iq.add_argument("--N", type=int, required=True)
    iq.add_argument("--d", type=int, required=True)
    iq.add_argument("--exps", type=_exps, required=True)
    iq.add_argument("--order", choices=("lowest", "highest"), default="lowest")
    iq.set_defaults(func=cmd_intersect)

    w = sub.add_parser("w", help="quasimap w-invariant")
    for name in ("N", "k", "d", "a", "b"):
        w.add_argument(f"--{name}", type=int, required=True)
    w.set_defaults(func=cmd_w)

    t = sub.add_parser("toric", help="toric data of the quasimap space")
    tsub = t.add_subparsers(dest="action", parser_class=_Parser)
    tsub.required = True
    te = tsub.add_parser("emit", help="dump rays, collections, ideals, class group")
    te.add_argument("--N", type=int, required=True)
    te.add_argument("--d", type=int, required=True)
    te.add_argument("--format", choices=("json",), default="json")
    te.set_defaults(func=cmd_toric)
    return p


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    except PathDisagreement as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
