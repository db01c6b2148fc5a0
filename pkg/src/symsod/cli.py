"""Command-line front end.

Verbs::

    symsod decompose  "sym(2, sod(pt, pt, pt))"   # full expansion
    symsod invariants "hilb(3, blowup(P2))"       # euler / hh / length
    symsod table q --l 2 --n 5                    # q(n;l) row
    symsod table gottsche --betti 1,0,1,0,1 --n 4 # Hilbert-scheme Betti table
    symsod verify --suite frobenius --max-n 5     # named property suites

Results go to stdout, diagnostics to stderr.  Exit codes: 0 success (and,
for verify, all checks passing); 2 parse or usage errors; 3 internal
invariant violations; 1 failed verification checks.

JSON output (``--format json``) is byte-stable for identical inputs.  For
expression verbs the schema is::

    {"input": str, "canonical": str,
     "components": [{"factors": [str, ...], "multiplicity": int}, ...],
     "invariants": {"euler": int|null, "hh_total": int|null,
                    "exceptional_length": int|null}}
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .expr import InternalInvariantError
from .grammar import ParseError, parse_expr, render_text, uses_hilb_sugar
from .invariants import InvariantReport, invariant_report
from .partitions import q_length
from .series import BettiVector, gottsche_series, poly_str
from .suites import SUITES, run_suites

_MCKAY_NOTE = (
    "note: hilb(n, S) is read as sym(n, S); identifying that with the "
    "Hilbert scheme of n points is the derived McKay correspondence "
    "(highly non-trivial, inherited here rather than computed)."
)


def _expression_payload(text: str) -> tuple[dict, InvariantReport]:
    expr = parse_expr(text)
    report = invariant_report(expr)
    payload = {
        "input": text,
        "canonical": render_text(expr),
        "components": [
            {
                "factors": [render_text(a) for a in row.component.factors],
                "multiplicity": row.multiplicity,
            }
            for row in report.components
        ],
        "invariants": report.to_json_dict(),
    }
    return payload, report


def _print_component_lines(payload: dict) -> None:
    total = sum(c["multiplicity"] for c in payload["components"])
    print(f"components ({len(payload['components'])} entries, total multiplicity {total}):")
    for idx, comp in enumerate(payload["components"], start=1):
        factors = " * ".join(comp["factors"])
        print(f"  {idx}. {factors}  x{comp['multiplicity']}")


def _invariant_lines(inv: dict) -> list[str]:
    euler = "unknown" if inv["euler"] is None else str(inv["euler"])
    hh = "unknown" if inv["hh_total"] is None else str(inv["hh_total"])
    if inv["exceptional_length"] is None:
        length = "not purely exceptional"
    else:
        length = str(inv["exceptional_length"])
    return [f"euler: {euler}", f"hh_total: {hh}", f"exceptional_length: {length}"]


def _cmd_decompose(args: argparse.Namespace) -> int:
    payload, _ = _expression_payload(args.expression)
    if args.format == "json":
        print(json.dumps(payload))
        return 0
    if uses_hilb_sugar(args.expression):
        print(_MCKAY_NOTE)
    print(f"canonical: {payload['canonical']}")
    _print_component_lines(payload)
    return 0


def _cmd_invariants(args: argparse.Namespace) -> int:
    payload, report = _expression_payload(args.expression)
    if args.format == "json":
        print(json.dumps(payload))
        return 0
    if uses_hilb_sugar(args.expression):
        print(_MCKAY_NOTE)
    print(f"canonical: {payload['canonical']}")
    for line in _invariant_lines(payload["invariants"]):
        print(line)
    print("per-component:")
    for idx, row in enumerate(report.components, start=1):
        euler = "unknown" if row.euler is None else row.euler
        hh = "unknown" if row.hh_total is None else row.hh_total
        print(f"  {idx}. {row.component}  x{row.multiplicity}  euler={euler} hh={hh}")
    return 0


def _parse_betti(text: str) -> BettiVector:
    pieces = text.split(",")
    if len(pieces) != 5:
        raise ValueError(f"--betti needs five comma-separated integers, got {text!r}")
    return BettiVector(*(int(p) for p in pieces))


def _cmd_table(args: argparse.Namespace) -> int:
    top = args.n if args.n is not None else (args.max_n if args.max_n is not None else 10)
    if top < 0:
        print("error: --n must be >= 0", file=sys.stderr)
        return 2
    if args.kind == "q":
        if args.l is None:
            print("error: table q needs --l", file=sys.stderr)
            return 2
        try:
            values = [q_length(n, args.l) for n in range(top + 1)]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        if args.format == "json":
            print(json.dumps({"table": "q", "l": args.l, "max_n": top, "values": values}))
        else:
            print(f"q(n;{args.l}) for n = 0..{top}:")
            print(", ".join(str(v) for v in values))
        return 0
    # gottsche
    if args.betti is None:
        print("error: table gottsche needs --betti b0,b1,b2,b3,b4", file=sys.stderr)
        return 2
    try:
        betti = _parse_betti(args.betti)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    series = gottsche_series(betti, max(top, 1))
    rows = []
    for n in range(top + 1):
        poly = series.q_coefficient(n)
        rows.append(
            {
                "n": n,
                "poincare": poly_str(poly),
                "total_betti": series.q_coefficient_at(n, 1),
                "euler": series.q_coefficient_at(n, -1),
            }
        )
    if args.format == "json":
        print(
            json.dumps(
                {"table": "gottsche", "betti": list(betti.as_tuple()), "max_n": top, "rows": rows}
            )
        )
    else:
        print(f"Hilbert-scheme Betti table for surface Betti {betti.as_tuple()}:")
        for row in rows:
            print(
                f"  n={row['n']}: total={row['total_betti']} euler={row['euler']}  "
                f"P(z) = {row['poincare']}"
            )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        results = run_suites(args.suite, max_n=args.max_n, seed=args.seed)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    passed = sum(1 for r in results if r.ok)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "suite": args.suite,
                    "passed": passed,
                    "failed": len(results) - passed,
                    "checks": [
                        {"suite": r.suite, "name": r.name, "ok": r.ok, "detail": r.detail}
                        for r in results
                    ],
                }
            )
        )
    else:
        for r in results:
            tag = "PASS" if r.ok else "FAIL"
            print(f"[{tag}] {r.suite}:{r.name} -- {r.detail}")
        print(f"passed {passed}/{len(results)} checks")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symsod",
        description="Expand symmetric products of categories into semi-orthogonal components.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_dec = sub.add_parser("decompose", help="fully expand an expression")
    p_dec.add_argument("expression")
    p_dec.add_argument("--format", choices=("text", "json"), default="text")
    p_dec.set_defaults(func=_cmd_decompose)

    p_inv = sub.add_parser("invariants", help="euler / hh / exceptional length")
    p_inv.add_argument("expression")
    p_inv.add_argument("--format", choices=("text", "json"), default="text")
    p_inv.set_defaults(func=_cmd_invariants)

    p_tab = sub.add_parser("table", help="q(n;l) rows or Hilbert-scheme Betti tables")
    p_tab.add_argument("kind", choices=("q", "gottsche"))
    p_tab.add_argument("--l", type=int, default=None, help="number of exceptional pieces")
    p_tab.add_argument("--betti", default=None, help="b0,b1,b2,b3,b4 for the gottsche table")
    p_tab.add_argument("--n", type=int, default=None, help="largest weight to print")
    p_tab.add_argument("--max-n", type=int, default=None, help="alias for --n")
    p_tab.add_argument("--format", choices=("text", "json"), default="text")
    p_tab.set_defaults(func=_cmd_table)

    p_ver = sub.add_parser("verify", help="run the built-in property suites")
    p_ver.add_argument(
        "--suite", default="all", help=f"one of: {', '.join(SUITES)}, or all (default)"
    )
    p_ver.add_argument("--max-n", type=int, default=None, help="cap the exhaustive ranges")
    p_ver.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
