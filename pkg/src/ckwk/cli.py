"""Command-line surface.

Subcommands:
  decide            decide provability of a sequent, optionally with a proof
  interpolate       compute a uniform interpolant of a formula
  check-uip         exhaustively verify uniformity of an interpolant
  check-structural  exhaustively verify admissible structural rules
  selftest          run the bundled verification battery

Exit status: 0 for success or provable, 1 for unprovable or a property
failure, 2 for usage or parse errors.  Timing information never goes to
stdout, so output is reproducible byte for byte; report directories
receive the timed, structured results instead.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .calculus import LogicId, proof_to_json, proof_to_latex, proof_to_text
from .formula import Formula, free_vars
from .oracle import EnumConfig, Report, check_hilbert_axioms, check_structural, check_uniformity
from .parser import ParseError, parse_formula, parse_sequent
from .render import formula_to_json, render_latex, render_text
from .search import SearchCache, decide, provable
from .sequent import EMPTY, FMultiset, Sequent
from .uip import (
    QuantCache,
    interpolate_exists,
    interpolate_forall,
    simplify,
)

STRUCTURAL_RULES = ("wk", "id", "impL", "cntr", "cut")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ckwk",
        description="Decision procedures and uniform interpolation for the "
        "constructive modal logics CK and WK.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("decide", help="decide provability of a sequent")
    p.add_argument("sequent", help="sequent such as 'p, p -> q |- q' or '|- p -> p'")
    p.add_argument("--logic", choices=["ck", "wk"], default="ck")
    p.add_argument("--proof", choices=["none", "text", "json", "latex"], default="none")

    p = sub.add_parser("interpolate", help="compute a uniform interpolant")
    p.add_argument("formula")
    p.add_argument("--logic", choices=["ck", "wk"], default="ck")
    p.add_argument("--var", required=True, metavar="NAME", help="variable to eliminate")
    p.add_argument("--quantifier", choices=["forall", "exists"], default="exists")
    p.add_argument("--format", choices=["text", "latex", "json"], default="text")
    p.add_argument(
        "--simplify",
        action="store_true",
        help="apply the unit-law simplifier and certify equivalence",
    )
    p.add_argument(
        "--check",
        action="store_true",
        help="re-verify the defining implication and freeness before printing",
    )

    p = sub.add_parser("check-uip", help="verify uniformity of an interpolant")
    p.add_argument("formula")
    p.add_argument("--logic", choices=["ck", "wk"], default="ck")
    p.add_argument("--var", required=True, metavar="NAME")
    p.add_argument("--max-weight", type=int, default=3)
    p.add_argument("--max-context", type=int, default=1)
    p.add_argument("--report", metavar="DIR", help="write report files to DIR")

    p = sub.add_parser("check-structural", help="verify admissible structural rules")
    p.add_argument("rule", choices=STRUCTURAL_RULES + ("all",))
    p.add_argument("--logic", choices=["ck", "wk"], default="ck")
    p.add_argument("--max-weight", type=int, default=4)
    p.add_argument("--max-context", type=int, default=2)
    p.add_argument("--report", metavar="DIR", help="write report files to DIR")

    p = sub.add_parser("selftest", help="run the bundled verification battery")
    p.add_argument("--max-weight", type=int, default=3)
    p.add_argument("--max-context", type=int, default=2)
    p.add_argument("--report", metavar="DIR", help="write report files to DIR")

    return parser


def _print_reports(reports: list[Report], report_dir: str | None) -> int:
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        print(f"{r.name}: {status} ({r.instances} instances, {len(r.failures)} failures)")
        for line in r.failures[:5]:
            print(f"  counterexample: {line}")
    if report_dir is not None:
        from .reporting import write_reports

        for path in write_reports(reports, report_dir):
            print(f"wrote {path}", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_decide(args: argparse.Namespace) -> int:
    logic = LogicId(args.logic)
    s = parse_sequent(args.sequent)
    result = decide(s, logic)
    print("provable" if result.provable else "unprovable")
    if result.provable and args.proof != "none":
        if args.proof == "text":
            print(proof_to_text(result.proof))
        elif args.proof == "json":
            import json

            print(json.dumps(proof_to_json(result.proof), sort_keys=True))
        else:
            print(proof_to_latex(result.proof))
    return 0 if result.provable else 1


def _render(phi: Formula, fmt: str) -> str:
    if fmt == "text":
        return render_text(phi)
    if fmt == "latex":
        return render_latex(phi)
    import json

    return json.dumps(formula_to_json(phi), sort_keys=True)


def _cmd_interpolate(args: argparse.Namespace) -> int:
    logic = LogicId(args.logic)
    phi = parse_formula(args.formula)
    if args.quantifier == "forall":
        result = interpolate_forall(phi, args.var, logic)
    else:
        result = interpolate_exists(phi, args.var, logic)

    if args.check:
        cache = SearchCache()
        free_ok = args.var not in free_vars(result)
        if args.quantifier == "forall":
            implies_ok = provable(Sequent(FMultiset((result,)), phi), logic, cache)
        else:
            implies_ok = provable(Sequent(FMultiset((phi,)), result), logic, cache)
        if not (free_ok and implies_ok):
            print("check: failed", file=sys.stderr)
            return 1
        print("check: passed")

    if args.simplify:
        simple = simplify(result)
        cache = SearchCache()
        certified = provable(
            Sequent(FMultiset((simple,)), result), logic, cache
        ) and provable(Sequent(FMultiset((result,)), simple), logic, cache)
        print(f"simplified-equivalent: {'true' if certified else 'false'}")
        result = simple

    print(_render(result, args.format))
    return 0


def _cmd_check_uip(args: argparse.Namespace) -> int:
    logic = LogicId(args.logic)
    phi = parse_formula(args.formula)
    alphabet = tuple(sorted(free_vars(phi) | {args.var}))
    cfg = EnumConfig(alphabet, args.max_weight, args.max_context)
    report = check_uniformity(phi, args.var, logic, cfg)
    return _print_reports([report], args.report)


def _cmd_check_structural(args: argparse.Namespace) -> int:
    logic = LogicId(args.logic)
    cfg = EnumConfig(("p", "q"), args.max_weight, args.max_context)
    rules = STRUCTURAL_RULES if args.rule == "all" else (args.rule,)
    cache = SearchCache()
    reports = [check_structural(rule, logic, cfg, cache) for rule in rules]
    return _print_reports(reports, args.report)


def _golden_report() -> Report:
    import time

    t0 = time.monotonic()
    report = Report(name="golden-interpolants")
    fixtures = [
        ("forall", "p", "p", "false"),
        ("forall", "q", "p", "q"),
        ("forall", "q -> p", "p", "(q & []true) -> false"),
        ("exists", "p", "p", "true & []true"),
    ]
    for quant, text, var, expected in fixtures:
        report.instances += 1
        phi = parse_formula(text)
        fn = interpolate_forall if quant == "forall" else interpolate_exists
        got = render_text(fn(phi, var, LogicId.CK))
        if got != expected:
            report.failures.append(f"{quant} {var} ({text}): {got} != {expected}")
    report.elapsed = time.monotonic() - t0
    return report


def _cmd_selftest(args: argparse.Namespace) -> int:
    cfg = EnumConfig(("p", "q"), args.max_weight, args.max_context)
    ucfg = EnumConfig(("p", "q"), min(args.max_weight, 3), 1)
    reports = [_golden_report()]
    for logic in (LogicId.CK, LogicId.WK):
        reports.append(check_hilbert_axioms(logic))
        cache = SearchCache()
        for rule in STRUCTURAL_RULES:
            reports.append(check_structural(rule, logic, cfg, cache))
        cache.clear()
        qcache = QuantCache()
        for text in ("p", "p -> q", "<>p", "[]p & q"):
            reports.append(
                check_uniformity(parse_formula(text), "p", logic, ucfg, qcache=qcache)
            )
    return _print_reports(reports, args.report)


_DISPATCH = {
    "decide": _cmd_decide,
    "interpolate": _cmd_interpolate,
    "check-uip": _cmd_check_uip,
    "check-structural": _cmd_check_structural,
    "selftest": _cmd_selftest,
}


def run(argv: Sequence[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.subcommand](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
