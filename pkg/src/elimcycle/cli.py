"""Command line entry point."""

from __future__ import annotations

import argparse
import sys

from .errors import (
    CertificationError,
    ElimError,
    InputError,
    LocalizationError,
    OrderMismatchError,
    ResourceError,
    ScopeError,
    ShapeError,
)
from .report import Report, emit_report

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_SCOPE = 0, 1, 2, 3


def exit_code_for(exc: ElimError) -> int:
    if isinstance(exc, InputError):
        return EXIT_INPUT
    if isinstance(exc, (ScopeError, ResourceError, ShapeError, LocalizationError,
                        OrderMismatchError)):
        return EXIT_SCOPE
    if isinstance(exc, CertificationError):
        return EXIT_FALSE
    return EXIT_FALSE


def error_report(command: str, exc: ElimError) -> Report:
    report = getattr(exc, "report", None) or Report(command=command)
    report.error = {
        "step": exc.step or "load_scenario",
        "kind": type(exc).__name__,
        "message": str(exc),
    }
    return report


def _load(path, allow_n_gt_1=False):
    from .scenario import load_scenario

    sc = load_scenario(path)
    if allow_n_gt_1:
        sc = sc.with_options(allow_n_gt_1=True)
    return sc


def _cmd_check(args) -> tuple[Report, int]:
    from .eliminate import run_checks

    report = run_checks(_load(args.file, args.allow_n_gt_1), order=args.order)
    return report, EXIT_OK if report.ok else EXIT_FALSE


def _cmd_classify(args) -> tuple[Report, int]:
    from .eliminate import DeformationInput, classify
    from .groebner import gb_budget
    from .setup import validate_setup

    sc = _load(args.file)
    report = Report(command="classify")
    report.setup = {"f": str(sc.f), "g": str(sc.g), "h": str(sc.h)}
    report.deformation = {"a1": str(sc.a1), "b1": str(sc.b1),
                          "a2": None if sc.a2 is None else str(sc.a2)}
    step = "validate_setup"
    try:
        with gb_budget(sc.max_gb_steps):
            s = validate_setup(sc.f, sc.g, sc.h)
            step = "classify"
            report.case = classify(DeformationInput(sc.a1, sc.b1, sc.a2), s)
    except ElimError as exc:
        exc.step, exc.report = step, report
        raise
    return report, EXIT_OK


def _cmd_eliminate(args) -> tuple[Report, int]:
    from .eliminate import run_pipeline

    report = run_pipeline(_load(args.file, args.allow_n_gt_1))
    # a standalone obstruction is a finding; only the replacement must certify
    return report, EXIT_OK if report.ok else EXIT_FALSE


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest

    return run_selftest(sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="elimcycle",
                                description="Exact obstruction elimination for curves at a point.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="membership checks only")
    c.add_argument("file")
    c.add_argument("--order", type=int, choices=(1, 2), default=1)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--allow-n-gt-1", action="store_true")
    c.set_defaults(run=_cmd_check)

    c = sub.add_parser("classify", help="report Case 1 or Case 2")
    c.add_argument("file")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.set_defaults(run=_cmd_classify)

    c = sub.add_parser("eliminate", help="full pipeline")
    c.add_argument("file")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--allow-n-gt-1", action="store_true")
    c.set_defaults(run=_cmd_eliminate)

    c = sub.add_parser("selftest", help="ladder check and invariant suites on built-in setups")
    c.set_defaults(run=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        return _cmd_selftest(args)
    try:
        report, code = args.run(args)
    except ElimError as exc:
        report, code = error_report(args.command, exc), exit_code_for(exc)
        print(f"elimcycle: {report.error['kind']}: {exc}", file=sys.stderr)
    sys.stdout.write(emit_report(report, args.format, code))
    return code


if __name__ == "__main__":
    sys.exit(main())
