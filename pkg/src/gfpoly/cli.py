"""``gfpoly`` command line.

Exit codes: 0 all checks passed, 1 a claim check failed, 2 usage or parse
error, 3 a computation budget was exceeded.  Failures print a JSON object
``{"error": ..., "message": ...}``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Sequence

from . import worked_examples
from .constructions import chain_polytope, gamma_of_posets, omega_of_posets, order_polytope
from .ehrhart import ehrhart_polynomial, volume_omega_formula
from .errors import BudgetExceeded, GFPolyError
from .io import dumps, rational, read_polytope, read_poset
from .polytope import LatticePolytope
from .reflexive import reflexivity_report
from .toric import FAMILIES, generate_family, verify_system

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

BUILD_KINDS = ("order", "chain", "gamma-oo", "gamma-oc", "gamma-cc", "omega-oo", "omega-oc", "omega-cc")


class UsageError(GFPolyError, ValueError):
    pass


def _emit(obj, out) -> None:
    out.write(dumps(obj) + "\n")


def _write_polytope(P: LatticePolytope, path: str | None, out) -> None:
    text = dumps(P.to_json())
    if path:
        Path(path).write_text(text + "\n")
    else:
        out.write(text + "\n")


def cmd_build(args, out) -> int:
    posets = [read_poset(p) for p in args.posets]
    if args.kind in ("order", "chain"):
        if len(posets) != 1:
            raise UsageError(f"--kind {args.kind} takes one poset file")
        P = posets[0]
        poly = order_polytope(P) if args.kind == "order" else chain_polytope(P)
    else:
        if len(posets) != 2:
            raise UsageError(f"--kind {args.kind} takes two poset files")
        shape, pair = args.kind.split("-")
        build = omega_of_posets if shape == "omega" else gamma_of_posets
        poly = build(posets[0], posets[1], pair)
    _write_polytope(poly, args.output, out)
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    P = read_polytope(args.polytope)
    everything = not (args.reflexive or args.normal or args.ehrhart or args.f_vector)
    rep = reflexivity_report(
        P,
        normal=everything or args.normal,
        normal_max_level=args.max_level,
        ehrhart=everything or args.ehrhart,
        faces=everything or args.f_vector,
    )
    rep.input = {"polytope": str(args.polytope), "ambient_dim": P.ambient_dim, "dim": P.dim}
    _emit(rep.to_json(), out)
    return EXIT_OK


def cmd_ehrhart(args, out) -> int:
    P = read_polytope(args.polytope)
    e = ehrhart_polynomial(P)
    _emit({"polytope": str(args.polytope), "ehrhart": e.to_json(), "text": str(e)}, out)
    return EXIT_OK


def cmd_volume(args, out) -> int:
    P, Q = read_poset(args.P), read_poset(args.Q)
    methods = args.method or ["ehrhart"]
    result: dict = {"polytope": "omega-oc"}
    values = {}
    if "ehrhart" in methods:
        values["ehrhart"] = ehrhart_polynomial(omega_of_posets(P, Q, "oc")).leading
    if "linext" in methods:
        values["linext"] = volume_omega_formula(P, Q)
    result["volume"] = {m: rational(v) for m, v in values.items()}
    code = EXIT_OK
    if len(values) == 2:
        agree = values["ehrhart"] == values["linext"]
        result["cross_check"] = agree
        code = EXIT_OK if agree else EXIT_FAIL
    _emit(result, out)
    return code


def cmd_groebner(args, out) -> int:
    P, Q = read_poset(args.P), read_poset(args.Q)
    S = generate_family(args.family, P, Q)
    rep = verify_system(S, n_max=args.degree, max_pairs=args.max_pairs)
    _emit(rep.to_json(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_classify2d(args, out) -> int:
    ok, details = worked_examples.census_2d(args.radius)
    details["passed"] = ok
    _emit(details, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_paper_examples(args, out) -> int:
    results = worked_examples.run_all(deep=args.deep, census=not args.skip_census)
    payload = {"claims": [r.to_json() for r in results], "passed": all(r.passed for r in results)}
    _emit(payload, out)
    return EXIT_OK if payload["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gfpoly", description="Gorenstein Fano polytopes from posets")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a polytope from poset files")
    p.add_argument("--kind", choices=BUILD_KINDS, required=True)
    p.add_argument("posets", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("analyze", help="reflexivity, normality, f-vector and Ehrhart data")
    p.add_argument("polytope")
    p.add_argument("--reflexive", action="store_true")
    p.add_argument("--normal", action="store_true")
    p.add_argument("--ehrhart", action="store_true")
    p.add_argument("--f-vector", action="store_true")
    p.add_argument("--max-level", type=int, default=None, help="stop the normality search at this level")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("ehrhart", help="Ehrhart polynomial of a polytope file")
    p.add_argument("polytope")
    p.set_defaults(fn=cmd_ehrhart)

    p = sub.add_parser("volume", help="volume of omega(O_P, C_Q)")
    p.add_argument("P")
    p.add_argument("Q")
    p.add_argument("--method", action="append", choices=("ehrhart", "linext"))
    p.set_defaults(fn=cmd_volume)

    p = sub.add_parser("groebner", help="verify a quadratic binomial family")
    p.add_argument("P")
    p.add_argument("Q")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--max-pairs", type=int, default=10**6)
    p.set_defaults(fn=cmd_groebner)

    p = sub.add_parser("classify2d", help="unimodular classes of reflexive polygons")
    p.add_argument("--radius", type=int, default=4)
    p.set_defaults(fn=cmd_classify2d)

    p = sub.add_parser("paper-examples", help="replay the worked examples and report each claim")
    p.add_argument("--deep", action="store_true", help="search normality witnesses past level 3")
    p.add_argument("--skip-census", action="store_true")
    p.set_defaults(fn=cmd_paper_examples)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    t = time.perf_counter()
    try:
        code = args.fn(args, out)
    except BudgetExceeded as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, out)
        return EXIT_BUDGET
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, out)
        return EXIT_USAGE
    logging.getLogger(__name__).info("done in %.2fs", time.perf_counter() - t)
    return code


if __name__ == "__main__":
    sys.exit(main())
