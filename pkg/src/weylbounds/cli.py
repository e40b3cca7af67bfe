"""Command-line interface.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
JSON output is compact with a stable key order; integers that can grow
without bound are emitted as decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import bounds as B
from .cache import cache_load, cache_store, default_cache_path
from .charnorm import weyl_dim
from .errors import DomainError
from .jantzen import (
    jantzen_sum,
    length_bound_closed,
    length_bound_exact,
    restricted_length_bound,
)
from .rootsys import RootSystemSpec, build, to_json
from .selftest import run_selftest
from .sl2oracle import sl2_weyl_factors
from .weights import PrimeContext, as_weight, d_lambda, restricted_max_d

def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _parse_lam(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _system(label):
    return build(RootSystemSpec.parse(label))


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=None, dest="fmt")
    common.add_argument("--json", action="store_const", const="json", dest="fmt", help="same as --format json")
    common.add_argument("--cache", default=None, help="length-bound cache file (default: $WEYLBOUNDS_CACHE)")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    c = _common()
    ap = argparse.ArgumentParser(prog="weylbounds", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True, metavar="COMMAND")

    sp = sub.add_parser("roots", parents=[c], help="dump root data as JSON")
    sp.add_argument("system")

    sp = sub.add_parser("dlambda", parents=[c], help="alcove depth d(lam)")
    sp.add_argument("system")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--lam", type=_parse_lam, required=True)
    sp.add_argument("--floor", action="store_true", help="use floor(x/p) per root instead of ceil(x/p)-1")

    sp = sub.add_parser("maxd", parents=[c], help="max of d(lam) over restricted lam")
    sp.add_argument("system")
    sp.add_argument("--p", type=int, default=None)

    sp = sub.add_parser("jantzen", parents=[c], help="collected Jantzen sum")
    sp.add_argument("system")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--lam", type=_parse_lam, required=True)

    sp = sub.add_parser("dim", parents=[c], help="Weyl module dimension")
    sp.add_argument("system")
    sp.add_argument("--lam", type=_parse_lam, required=True)

    lp = sub.add_parser("length", help="Weyl module length bounds")
    lsub = lp.add_subparsers(dest="kind", required=True, metavar="KIND")
    sp = lsub.add_parser("exact", parents=[c], help="recursive bound from the sum formula")
    sp.add_argument("system")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--lam", type=_parse_lam, required=True)
    sp = lsub.add_parser("closed", parents=[c], help="closed-form geometric bound")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp = lsub.add_parser("restricted", parents=[c], help="bound for all restricted highest weights")
    sp.add_argument("system")
    sp.add_argument("--p", type=int, required=True)
    sp = lsub.add_parser("sl2", parents=[c], help="exact SL2 composition factors (oracle)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--lam", type=int, required=True)

    bp = sub.add_parser("bound", help="first-cohomology bounds")
    bsub = bp.add_subparsers(dest="kind", required=True, metavar="KIND")
    for name in ("theorem-a", "theorem-c"):
        sp = bsub.add_parser(name, parents=[c])
        sp.add_argument("system", nargs="?", help="system label, or give --h")
        sp.add_argument("--h", type=int, default=None)
        if name == "theorem-a":
            sp.add_argument("--p", type=int, required=True)
    sp = bsub.add_parser("lcf", parents=[c])
    sp.add_argument("system")
    sp = bsub.add_parser("steinberg", parents=[c])
    sp.add_argument("system")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, default=1)
    sp = bsub.add_parser("cross-char", parents=[c])
    sp.add_argument("system")
    sp.add_argument("--e", type=int, required=True)
    sp = bsub.add_parser("finite", parents=[c])
    sp.add_argument("system")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--twist", choices=B.TWISTS, default="untwisted")
    sp.add_argument("--e", type=int, default=None, help="twisted rank")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--b-alg", type=int, default=None, help="explicit algebraic-group bound")
    g.add_argument("--alg", choices=("restricted", "lcf"), default="restricted",
                   help="derive the algebraic-group bound (default: restricted)")

    tp = sub.add_parser("table", help="tables")
    tsub = tp.add_subparsers(dest="kind", required=True, metavar="KIND")
    sp = tsub.add_parser("growth", parents=[c])
    sp.add_argument("--lmax", type=int, required=True)
    sp.add_argument("--families", default="ABCD")
    sp.add_argument("--no-exceptional", action="store_true")
    sp.add_argument("--p", type=int, default=2)

    sub.add_parser("selftest", parents=[c], help="run built-in checks")
    return ap


def _h_of(args):
    if args.h is not None:
        return args.h
    if args.system is None:
        raise DomainError("give a system label or --h")
    return _system(args.system).coxeter


def _scalar(args, value, key="value"):
    if args.fmt == "json":
        return _dump({key: str(value)})
    return str(value)


def _cmd_roots(args, out):
    return _dump(to_json(_system(args.system)))


def _cmd_dlambda(args, out):
    rs = _system(args.system)
    return _scalar(args, d_lambda(rs, as_weight(rs, args.lam), PrimeContext(args.p), floor=args.floor), "d")


def _cmd_maxd(args, out):
    rs = _system(args.system)
    return _scalar(args, restricted_max_d(rs, None if args.p is None else PrimeContext(args.p)), "max_d")


def _cmd_dim(args, out):
    rs = _system(args.system)
    return _scalar(args, weyl_dim(rs, as_weight(rs, args.lam)), "dim")


def _cmd_jantzen(args, out):
    rs = _system(args.system)
    combo = jantzen_sum(rs, as_weight(rs, args.lam), PrimeContext(args.p))
    if args.fmt == "json":
        return _dump(combo.to_json())
    if args.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["weight", "coeff"])
        for mu, c in combo.sorted_items():
            w.writerow([",".join(map(str, mu)), c])
        return buf.getvalue().rstrip("\n")
    if not combo:
        return "0"
    return "\n".join(f"{c:+d} chi({','.join(map(str, mu))})" for mu, c in combo.sorted_items())


def _cmd_length(args, out):
    if args.kind == "closed":
        return _scalar(args, length_bound_closed(args.d, args.b, PrimeContext(args.p).p), "bound")
    if args.kind == "sl2":
        dec = sl2_weyl_factors(args.lam, PrimeContext(args.p).p)
        if args.fmt == "json":
            factors = [{"weight": mu, "mult": m} for mu, m in sorted(dec.factors.items())]
            return _dump({"lambda": dec.lam, "p": dec.p, "length": dec.length, "factors": factors})
        return str(dec.length)
    rs = _system(args.system)
    ctx = PrimeContext(args.p)
    if args.kind == "restricted":
        rb = restricted_length_bound(rs, ctx)
        if args.fmt == "json":
            sharp = None if rb.sharp_bound is None else str(rb.sharp_bound)
            return _dump({"z": rb.z, "exponent": rb.exponent, "bound": str(rb.bound),
                          "sharp_exponent": rb.sharp_exponent, "sharp_bound": sharp})
        return str(rb.bound)
    path = args.cache or default_cache_path()
    cache = cache_load(path) if path else None
    value = length_bound_exact(rs, as_weight(rs, args.lam), ctx, cache)
    if path:
        cache_store(cache, path)
    return _scalar(args, value, "bound")


def _cmd_bound(args, out):
    k = args.kind
    if k == "theorem-a":
        return _scalar(args, B.theorem_a_bound(_h_of(args), PrimeContext(args.p).p), "bound")
    if k == "theorem-c":
        return _scalar(args, B.theorem_c_bound(_h_of(args)), "bound")
    rs = _system(args.system)
    if k == "lcf":
        return _scalar(args, B.lcf_length_bound(rs), "bound")
    if k == "steinberg":
        return _scalar(args, B.steinberg_trivial_bound(rs, args.p, args.r), "bound")
    if k == "cross-char":
        return _scalar(args, B.cross_char_bound(rs, args.e), "bound")
    q = B.FiniteGroupQuery(rs.spec, args.p, args.r, args.twist, args.e)
    if args.b_alg is not None:
        b_alg = args.b_alg
    elif args.alg == "lcf":
        b_alg = B.lcf_length_bound(rs)
    else:
        b_alg = restricted_length_bound(rs, PrimeContext(args.p)).bound
    rep = B.finite_group_bound(q, b_alg)
    if args.fmt == "json":
        return _dump(rep.to_json())
    lines = [f"case: {rep.case_tag}", f"formula: {rep.formula}", f"bound: {rep.bound}"]
    lines += [f"note: {n}" for n in rep.notes]
    return "\n".join(lines)


def _cmd_table(args, out):
    rows = B.growth_table(args.lmax, args.families.upper(), not args.no_exceptional, PrimeContext(args.p).p)
    if args.fmt == "json":
        return _dump([dict(zip(B.GROWTH_HEADER, r.cells())) for r in rows])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(B.GROWTH_HEADER)
    for r in rows:
        w.writerow(r.cells())
    return buf.getvalue().rstrip("\n")


def _cmd_selftest(args, out):
    failed = 0
    lines = []
    for name, ok, bad in run_selftest():
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}")
        for b in bad[:10]:
            lines.append(f"      {b}")
        failed += not ok
    args.status = 1 if failed else 0
    return "\n".join(lines)


COMMANDS = {
    "roots": _cmd_roots,
    "dlambda": _cmd_dlambda,
    "maxd": _cmd_maxd,
    "dim": _cmd_dim,
    "jantzen": _cmd_jantzen,
    "length": _cmd_length,
    "bound": _cmd_bound,
    "table": _cmd_table,
    "selftest": _cmd_selftest,
}


def _setup_logging(verbose: int) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    logger = logging.getLogger("weylbounds")
    logger.handlers[:] = [handler]
    logger.propagate = False
    logger.setLevel(max(logging.WARNING - 10 * verbose, logging.DEBUG))


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    _setup_logging(args.verbose)
    try:
        text = COMMANDS[args.cmd](args, out)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out.write(text + "\n")
    return getattr(args, "status", 0)


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
