"""Command-line front end.

Exit codes: 0 success, 1 computation error, 2 refutation found (never
expected over a finite field), 64 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .corpus import KINDS, RunConfig, corpus_scan
from .errors import FqxError, ParseError
from .hyperell import odd_degree_cap, odd_point_search
from .places import RatFunc, ramify
from .polyring import set_global_seed
from .qforms import DEFAULT_VECTOR_CAP, DiagForm, is_isotropic, vector_search_report
from .sqref import SqRefRefutation, certify, kornblum_find, verify_certificate
from .textio import format_poly, parse_field, parse_form, parse_poly, parse_ratfunc
from .transfer import DEFAULT_BUDGET, build_system, equivalence_check, pencil_rank_check

EXIT_OK, EXIT_ERROR, EXIT_REFUTED, EXIT_USAGE = 0, 1, 2, 64

BANNER = """\
!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!
!! CONSISTENCY FAILURE: a square-reflexivity refutation was     !!
!! produced over a finite field. Every odd finite field is      !!
!! square-reflexive, so this is an implementation bug.          !!
!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!!"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj: dict, args) -> None:
    obj = {"schema": 1, **obj}
    if getattr(args, "json", False) or not getattr(args, "text", False):
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def _rat(F, text: str) -> RatFunc:
    return RatFunc(*parse_ratfunc(F, text))


# -- subcommands -------------------------------------------------------------

def cmd_certify(args) -> int:
    F = args.field
    f = parse_poly(F, args.poly)
    res = certify(f, exhaustive=args.exhaustive)
    if isinstance(res, SqRefRefutation):
        print(BANNER, file=sys.stderr)
        _emit({"f": format_poly(f), "refuted": True, "alpha": str(res.alpha)}, args)
        return EXIT_REFUTED
    if not verify_certificate(res):
        raise FqxError("certificate failed independent re-verification")
    _emit({
        "f": format_poly(f),
        "lc": F.fmt(f.c[-1]) if f.c else "0",
        "classes": [
            {"alpha": str(e.alpha), "witness_g": format_poly(e.witness), "checks": e.checks}
            for e in res.entries
        ],
    }, args)
    return EXIT_OK


def cmd_isotropy(args) -> int:
    F = args.field
    phi = DiagForm.from_values([RatFunc(n, d) for n, d in parse_form(F, args.form)])
    v = is_isotropic(phi)
    out = {"form": str(phi), "isotropic": v.isotropic, "justification": v.justification.value}
    if v.place is not None:
        out["place"] = str(v.place)
    if v.local_table is not None:
        out["local_table"] = [{"place": str(p), "isotropic": ok} for p, ok in v.local_table]
    if args.witness_cap is not None and phi.dim >= 2:
        r = vector_search_report(phi, args.witness_cap)
        out["witness"] = None if r.witness is None else [format_poly(x) for x in r.witness]
        out["witness_search_complete"] = r.complete
    _emit(out, args)
    return EXIT_OK


def cmd_ramify(args) -> int:
    F = args.field
    rho = ramify(_rat(F, args.f), _rat(F, args.g))
    _emit({"f": args.f, "g": args.g, "ramification": rho.to_json()}, args)
    return EXIT_OK


def cmd_kornblum(args) -> int:
    F = args.field
    f = parse_poly(F, args.f)
    g0 = parse_poly(F, args.g0)
    q = kornblum_find(f, g0, args.parity, args.cap)
    _emit({"f": format_poly(f), "g0": format_poly(g0), "q": format_poly(q), "degree": q.deg}, args)
    return EXIT_OK


def cmd_hyperell(args) -> int:
    F = args.field
    f = parse_poly(F, args.poly)
    cap, complete = (args.cap, False) if args.cap is not None else odd_degree_cap(f)
    pt = odd_point_search(f, cap)
    out = {"f": format_poly(f), "found": pt is not None, "cap": cap}
    if pt is not None:
        out.update(degree=pt.degree, p=format_poly(pt.p), y=str(pt.y))
    else:
        out["complete"] = complete
    _emit(out, args)
    return EXIT_OK


def cmd_transfer(args) -> int:
    F = args.field
    f = parse_poly(F, args.f)
    g = parse_poly(F, args.g)
    sys_ = build_system(f, g)
    rep = equivalence_check(f, g, args.ext, args.budget)
    _emit({
        "f": format_poly(f),
        "g": format_poly(g),
        "ext": args.ext,
        "system_dims": list(sys_.dims),
        "pencil_ok": pencil_rank_check(sys_),
        "points_cprime": rep.points_cprime,
        "points_c": rep.points_c,
        "equivalence": {"lhs": rep.lhs, "rhs": rep.rhs, "agree": rep.agree},
    }, args)
    return EXIT_OK


def _config(args) -> RunConfig:
    return RunConfig(field=args.field, seed=args.seed, jobs=args.jobs,
                     samples=getattr(args, "samples", 500),
                     output="json" if args.json else "text")


def _emit_report(report, args) -> int:
    _emit({k: v for k, v in report.to_json().items() if k != "schema"}, args)
    if report.counters["refuted"]:
        print(BANNER, file=sys.stderr)
        return EXIT_REFUTED
    return EXIT_OK if report.counters["errors"] == 0 else EXIT_ERROR


def cmd_lgp_scan(args) -> int:
    return _emit_report(corpus_scan("lgp4", args.max_degree, _config(args)), args)


def cmd_corpus(args) -> int:
    return _emit_report(corpus_scan(args.kind, args.degree, _config(args)), args)


# -- parser ------------------------------------------------------------------

def _field_arg(text: str):
    try:
        return parse_field(text)
    except FqxError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", type=_field_arg, required=True, help="gf(p) or gf(p^k)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--json", action="store_true", help="JSON output (the default)")
    common.add_argument("--text", action="store_true", help="plain key: value output")

    p = _Parser(prog="fqx", description="Square classes, symbols and quadratic forms over F_q(X).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("certify-sqref", parents=[common], help="certify square-reflexivity of f")
    s.add_argument("--poly", required=True)
    s.add_argument("--exhaustive", action="store_true")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("isotropy", parents=[common], help="decide isotropy of a diagonal form")
    s.add_argument("--form", required=True, help='entries separated by ";"')
    s.add_argument("--witness-cap", type=int, default=None)
    s.set_defaults(func=cmd_isotropy)

    s = sub.add_parser("ramify", parents=[common], help="ramification of the symbol {f, g}")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.set_defaults(func=cmd_ramify)

    s = sub.add_parser("kornblum", parents=[common], help="irreducible in a residue class mod f")
    s.add_argument("--f", required=True)
    s.add_argument("--g0", required=True)
    s.add_argument("--parity", type=int, choices=(0, 1), required=True)
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_kornblum)

    s = sub.add_parser("hyperell", parents=[common], help="odd-degree point on Y^2 = f(X)")
    s.add_argument("--poly", required=True)
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_hyperell)

    s = sub.add_parser("transfer-curve", parents=[common], help="transfer quadrics and their points")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("--ext", type=int, default=1)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_transfer)

    s = sub.add_parser("lgp-scan", parents=[common], help="dim-4 local vs slot cross-check")
    s.add_argument("--max-degree", type=int, default=3)
    s.add_argument("--samples", type=int, default=500)
    s.set_defaults(func=cmd_lgp_scan)

    s = sub.add_parser("corpus", parents=[common], help="scan every square-free f of a degree")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--kind", choices=[k for k in KINDS if k != "lgp4"], default="sqref")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    set_global_seed(args.seed)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FqxError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


def run(argv: Sequence[str] | None = None) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
