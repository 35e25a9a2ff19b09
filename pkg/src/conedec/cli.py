"""Command-line front end.

Exit codes: 0 success (valid / certified / complete), 1 semantic failure,
2 usage errors.  All JSON output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import builder as builder_mod
from .classical import janet_on_slice, pommaret_on_slice
from .closures import escalier_from_seed, ideal_from_seed
from .division import DivisionError, RelDivision
from .enumeration import ConflictError, canonical_form, enumerate_divisions, orbit_size
from .graphs import generalized_graph, redundant_graph, ufnarovsky_graph
from .oracle import verify_division_covering
from .terms import (
    format_term,
    parse_term,
    sigma_expected,
    var_names,
    vandermonde_identity_check,
)

USAGE_ERROR = 2


def _print_json(obj, compact: bool = False) -> None:
    if compact:
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print(json.dumps(obj, indent=2))


def _load_division(path: str) -> RelDivision:
    with open(path, "r", encoding="utf-8") as fh:
        return RelDivision.from_json(fh.read())


def _color_allowed() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def cmd_gen(args) -> int:
    if args.kind == "pommaret":
        order = None
        if args.order:
            order = tuple(int(p) for p in args.order.split(","))
        div = pommaret_on_slice(args.n, args.degree, order)
    else:
        if args.order:
            print("--order applies to pommaret only", file=sys.stderr)
            return USAGE_ERROR
        div = janet_on_slice(args.n, args.degree)
    print(div.to_json())
    return 0


def cmd_validate(args) -> int:
    div = _load_division(args.division)
    report = div.validate()
    if args.oracle is not None:
        report = report.merged(verify_division_covering(div, args.oracle))
    _print_json(report.to_json_dict())
    return 0 if report.valid else 1


def cmd_enumerate(args) -> int:
    count = 0
    sizes = []
    for div in enumerate_divisions(args.n, args.degree, args.orbits):
        count += 1
        if args.orbits:
            sizes.append(orbit_size(div))
        _print_json(div.to_json_dict(), compact=True)
    summary: dict = {"count": count}
    if args.orbits:
        summary["orbit_sizes"] = sizes
    _print_json(summary, compact=True)
    return 0


def cmd_graph(args) -> int:
    div = _load_division(args.division)
    build = {
        "ufnarovsky": ufnarovsky_graph,
        "redundant": redundant_graph,
        "generalized": generalized_graph,
    }[args.kind]
    g = build(div)
    if args.format == "dot":
        print(g.to_dot(), end="")
    else:
        _print_json(g.to_json_dict())
    return 0


def cmd_closure(args) -> int:
    div = _load_division(args.division)
    seed = [parse_term(s, div.n) for s in args.seed]
    run = ideal_from_seed if args.mode == "ideal" else escalier_from_seed
    result = run(div, seed, args.certify)
    payload = result.report.to_json_dict()
    payload["certified"] = result.certified
    if result.counterexample is not None:
        bad = result.counterexample
        if isinstance(bad, tuple) and bad and isinstance(bad[0], tuple):
            payload["counterexample"] = [format_term(t, div.n) for t in bad]
        else:
            payload["counterexample"] = format_term(bad, div.n)
    _print_json(payload)
    return 0 if result.certified else 1


def cmd_sigma(args) -> int:
    if args.division:
        div = _load_division(args.division)
        if not div.is_full_slice:
            print("profile comparison needs a full-slice division", file=sys.stderr)
            return USAGE_ERROR
        observed = list(div.sigma_profile())
        expected = list(sigma_expected(div.n, div.degree))
        _print_json({"profile": observed, "expected": expected,
                     "match": observed == expected})
        return 0 if observed == expected else 1
    expected = list(sigma_expected(args.n, args.degree))
    _print_json({"expected": expected, "sum": sum(expected)})
    return 0


def cmd_vandermonde(args) -> int:
    ok = vandermonde_identity_check(args.n, args.degree, args.d_max)
    _print_json({"n": args.n, "degree": args.degree, "d_max": args.d_max, "holds": ok})
    return 0 if ok else 1


def _build_interactive(session: builder_mod.BuildSession) -> int:
    color = _color_allowed()
    names = var_names(session.n)
    print(f"assigning T_{session.d} in variables {', '.join(names)};"
          " enter 'term = vars', empty line to stop", file=sys.stderr)
    while not session.complete:
        print(session.render(color), file=sys.stderr)
        try:
            line = input("choice> ")
        except EOFError:
            print("input ended before completion", file=sys.stderr)
            return 1
        if not line.strip():
            print("stopped before completion", file=sys.stderr)
            return 1
        try:
            choices = builder_mod.parse_script(line, session.n)
            for t, m in choices:
                session.assign(t, m)
        except (builder_mod.ScriptError, ConflictError, ValueError) as exc:
            print(f"rejected: {exc}", file=sys.stderr)
    print(session.render(color), file=sys.stderr)
    div = session.division()
    print(div.to_json())
    return 0 if div.validate().valid else 1


def cmd_build(args) -> int:
    if args.script:
        try:
            with open(args.script, "r", encoding="utf-8") as fh:
                session = builder_mod.run_script(args.n, args.degree, fh.read())
        except (builder_mod.ScriptError, ConflictError) as exc:
            print(f"conflict: {exc}", file=sys.stderr)
            return 1
        if not session.complete:
            print("script left the assignment incomplete", file=sys.stderr)
            print(session.render(False), file=sys.stderr)
            return 1
        div = session.division()
        print(div.to_json())
        return 0 if div.validate().valid else 1
    if not sys.stdin.isatty():
        print("interactive build needs a terminal; use --script", file=sys.stderr)
        return USAGE_ERROR
    return _build_interactive(builder_mod.BuildSession(args.n, args.degree))


def _add_slice_args(p) -> None:
    p.add_argument("n", type=int, help="number of variables")
    p.add_argument("degree", type=int, help="slice degree")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conedec",
        description="cone decompositions of monomial degree slices",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a classical assignment as JSON")
    p.add_argument("kind", choices=["pommaret", "janet"])
    _add_slice_args(p)
    p.add_argument("--order", help="comma-separated variable indices, smallest first")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("validate", help="check a division JSON file")
    p.add_argument("division")
    p.add_argument("--oracle", type=int, metavar="K",
                   help="also brute-force coverage up to degree+K")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("enumerate", help="stream all valid assignments")
    _add_slice_args(p)
    p.add_argument("--orbits", action="store_true",
                   help="one representative per renaming orbit")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("graph", help="emit a propagation graph")
    p.add_argument("division")
    p.add_argument("--kind", choices=["ufnarovsky", "redundant", "generalized"],
                   default="ufnarovsky")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("closure", help="compliant/revenant closure of a seed")
    p.add_argument("division")
    p.add_argument("seed", nargs="+", help="seed terms")
    p.add_argument("--mode", choices=["ideal", "escalier"], default="ideal")
    p.add_argument("--certify", type=int, default=3, metavar="K",
                   help="brute-force margin (default 3)")
    p.set_defaults(fn=cmd_closure)

    p = sub.add_parser("build", help="assemble an assignment choice by choice")
    _add_slice_args(p)
    p.add_argument("--script", help="file of 'term = vars' lines")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("sigma", help="expected size profile, optionally vs a division")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("degree", type=int, nargs="?")
    p.add_argument("--division", help="division JSON to compare")
    p.set_defaults(fn=cmd_sigma)

    p = sub.add_parser("vandermonde", help="check the profile splitting identity")
    _add_slice_args(p)
    p.add_argument("d_max", type=int, nargs="?", default=12)
    p.set_defaults(fn=cmd_vandermonde)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sigma" and args.division is None and (
            args.n is None or args.degree is None):
        parser.error("sigma needs n and degree, or --division FILE")
    try:
        return args.fn(args)
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return USAGE_ERROR
    except (DivisionError, LookupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
