"""
Command line front end.

Subcommands: classify, analyze, lines, cohomology, curve and survey. The
form comes from the positional argument, from ``--file`` or from stdin
(``-``). Exit status: 0 when a verdict (or the requested dump) is produced,
2 when the theorem does not apply or only a classification is possible,
1 on any error, reported as ``error [stage]: message`` on stderr.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

from pydantic import BaseModel

from .arith.finite_field import FiniteField, validate_prime
from .brauer.analyzer import BrauerAnalyzer
from .config import CubicBrauerConfig
from .curve.plane_cubic import PlaneCubic
from .errors import CubicBrauerError, InputError, NotAConeError, TheoremInapplicableError
from .models.report import (
    AnalysisReport,
    CohomologyRecord,
    CurveRecord,
    LinesDump,
    ReductionRecord,
    SurveyReport,
    dumps,
)
from .parsing import parse_cubic_form, tokenize

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_VERDICT = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors become InputError so they follow the exit-code contract."""

    def error(self, message: str) -> NoReturn:
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser.

    Returns:
        The parser with one subparser per command
    """
    common = _ArgumentParser(add_help=False)
    common.add_argument("form", nargs="?", help="cubic form, or '-' to read stdin")
    common.add_argument("--file", help="read the form from a file")
    common.add_argument("--precision", type=int, help="Pi-adic working precision")
    common.add_argument("--format", choices=["text", "json"], help="output format")
    common.add_argument("--seed", type=int, help="seed for polynomial factorization")
    common.add_argument("--config", help="path to a YAML configuration file")
    common.add_argument("--log-level", help="logging level (DEBUG, INFO, WARNING, ...)")

    parser = _ArgumentParser(
        prog="cubicbrauer",
        description="Brauer-Manin analysis of cubic surfaces over Q",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name, summary in (
        ("classify", "classify the reduction at a prime"),
        ("analyze", "run the full local analysis at a prime"),
        ("lines", "dump the 27 lines of a cone-type surface"),
        ("cohomology", "dump the inertia action on Pic and its cohomology"),
        ("curve", "group structure and flexes of a plane cubic mod p"),
    ):
        sub = commands.add_parser(name, parents=[common], help=summary)
        sub.add_argument("--prime", type=int, help="the prime p >= 5")
        if name == "curve":
            sub.add_argument("--degree", type=int,
                             help="count points over F_{p^k} (default: field of the flexes)")
    survey = commands.add_parser("survey", parents=[common],
                                 help="analyze several primes and draw a global conclusion")
    survey.add_argument("--primes", help="comma-separated primes (default: candidate primes)")
    return parser


def read_form_text(args: argparse.Namespace) -> str:
    """The form text from --file, stdin or the positional argument."""
    if args.file:
        path = Path(args.file)
        if not path.exists():
            raise InputError(f"input file not found: {args.file}")
        return path.read_text()
    if args.form == "-":
        return sys.stdin.read()
    if args.form is None:
        raise InputError("no form given; pass it as an argument, with --file or on stdin")
    return str(args.form)


def _prime(args: argparse.Namespace) -> int:
    if args.prime is None:
        raise InputError("--prime is required")
    return validate_prime(args.prime)


def _primes(text: str | None) -> list[int] | None:
    if not text:
        return None
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"--primes expects comma-separated integers, got {text!r}") from exc
    return [validate_prime(p) for p in values]


def configure(args: argparse.Namespace) -> None:
    """Load configuration and apply command-line overrides."""
    CubicBrauerConfig.initialize(args.config)
    if args.precision is not None:
        CubicBrauerConfig.set("arithmetic.eisenstein_precision", args.precision)
    if args.seed is not None:
        CubicBrauerConfig.set("arithmetic.seed", args.seed)
    if args.format is not None:
        CubicBrauerConfig.set("output.format", args.format)
    if args.log_level is not None:
        CubicBrauerConfig.set("logging.level", args.log_level)
    CubicBrauerConfig.configure_logging()


# text rendering

def format_reduction(record: ReductionRecord) -> str:
    lines = [f"reduction: {record.kind}", f"certificate: {record.certificate}"]
    if record.vertex is not None:
        lines.append(f"vertex: ({' : '.join(str(v) for v in record.vertex)})")
    if record.base_curve is not None:
        lines.append(f"base curve: {record.base_curve}")
    if record.s is not None:
        unit = "unit" if record.a_is_unit else "not a unit"
        lines.append(f"s = {record.s}, a = {record.a} ({unit})")
    if record.scalings:
        lines.append(f"scaling steps: {record.scalings}")
    return "\n".join(lines)


def format_curve(record: CurveRecord) -> str:
    invariants = " x ".join(f"Z/{d}" for d in record.invariants) or "trivial"
    lines = [
        f"curve: {record.curve}",
        f"points over F_p: {record.point_count}",
        f"group over F_{record.field_order}: {invariants}",
        f"3-torsion of order {record.three_torsion_order}",
        "flexes:",
    ]
    lines.extend(f"  {pt}  (degree {d})" for pt, d in zip(record.flexes, record.flex_degrees))
    return "\n".join(lines)


def format_cohomology(record: CohomologyRecord) -> str:
    h1 = " x ".join(f"Z/{d}" for d in record.h1_invariants) or "0"
    tate = " x ".join(f"Z/{d}" for d in record.tate_h0) or "0"
    lines = [
        f"H0 rank {record.h0_rank}, basis {record.h0_basis}",
        f"H1 = {h1}",
        f"Tate H0 = {tate}",
    ]
    if record.decomposition_h0_rank is not None:
        lines.append(f"decomposition group invariants of rank {record.decomposition_h0_rank}")
    if record.sigma_cycles:
        lines.append(f"sigma cycles: {record.sigma_cycles}")
    if record.frobenius_cycles:
        lines.append(f"Frobenius cycles: {record.frobenius_cycles}")
    lines.append("action matrix:")
    lines.extend("  " + " ".join(f"{x:3d}" for x in row) for row in record.action_matrix)
    return "\n".join(lines)


def format_lines(dump: LinesDump) -> str:
    lines = [f"27 lines over F_{dump.field_order} at precision Pi^{dump.precision}"]
    for record in dump.lines:
        lines.append(
            f"{record.index:2d} {record.label:<4} flex {record.flex} degree "
            f"{record.residue_degree} cone [{', '.join(record.cone_reduction)}] input "
            f"[{', '.join(record.input_reduction)}]"
        )
    lines.append(f"triples: {dump.triples}")
    lines.append(f"sigma cycles: {dump.sigma_cycles}")
    return "\n".join(lines)


def format_analysis(report: AnalysisReport) -> str:
    lines = [f"form: {report.form}", f"prime: {report.prime}", f"status: {report.status}",
             format_reduction(report.reduction)]
    if report.curve is not None:
        lines.append(format_curve(report.curve))
    if report.cohomology is not None:
        h1 = " x ".join(f"Z/{d}" for d in report.cohomology.h1_invariants) or "0"
        lines.append(f"H0 rank {report.cohomology.h0_rank}, H1 = {h1}")
    lines.append("checks:")
    lines.extend(f"  [{c.status}] {c.name} ({c.anchor}): {c.detail}" for c in report.checks)
    if report.verdicts:
        lines.append("verdicts:")
        lines.extend(f"  {v.key}: {v.statement}" for v in report.verdicts)
    lines.extend(f"note: {note}" for note in report.notes)
    return "\n".join(lines)


def format_survey(report: SurveyReport) -> str:
    lines = [f"form: {report.form}", f"primes: {report.primes}"]
    for place in report.places:
        keys = ", ".join(v.key for v in place.verdicts) or "none"
        lines.append(f"  p = {place.prime}: {place.reduction.kind}, {place.status}; "
                     f"verdicts: {keys}")
    lines.append(f"conclusion: {report.conclusion}")
    return "\n".join(lines)


def emit(model: BaseModel, text: str) -> None:
    if CubicBrauerConfig.output_format() == "json":
        print(dumps(model))
    else:
        print(text)


# commands

def cmd_classify(args: argparse.Namespace, analyzer: BrauerAnalyzer) -> int:
    form = parse_cubic_form(read_form_text(args))
    record = analyzer.classification(form, _prime(args))
    emit(record, format_reduction(record))
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace, analyzer: BrauerAnalyzer) -> int:
    form = parse_cubic_form(read_form_text(args))
    report = analyzer.analyze(form, _prime(args))
    emit(report, format_analysis(report))
    return EXIT_OK if report.status == "verdict" else EXIT_NO_VERDICT


def cmd_lines(args: argparse.Namespace, analyzer: BrauerAnalyzer) -> int:
    form = parse_cubic_form(read_form_text(args))
    dump = analyzer.lines(form, _prime(args))
    emit(dump, format_lines(dump))
    return EXIT_OK


def cmd_cohomology(args: argparse.Namespace, analyzer: BrauerAnalyzer) -> int:
    form = parse_cubic_form(read_form_text(args))
    record = analyzer.cohomology(form, _prime(args))
    emit(record, format_cohomology(record))
    return EXIT_OK


def cmd_curve(args: argparse.Namespace, analyzer: BrauerAnalyzer) -> int:
    text = read_form_text(args)
    p = _prime(args)
    surface = any(t.kind == "var" and t.text in ("w", "X3") for t in tokenize(text))
    if surface:
        _, reduction = analyzer.classify(parse_cubic_form(text), p)
        if reduction.base_curve is None or not reduction.is_cone:
            raise NotAConeError(f"the reduction is {reduction.kind.value}; it has no base curve",
                                stage="curve")
        curve = reduction.base_curve
    else:
        fp = FiniteField.of(p)
        curve = PlaneCubic(parse_cubic_form(text, nvars=3).map_coefficients(fp.coerce, fp))
    if args.degree is not None and args.degree < 1:
        raise InputError(f"--degree must be positive, got {args.degree}")
    record = analyzer.curve_record(curve, args.degree)
    emit(record, format_curve(record))
    return EXIT_OK


def cmd_survey(args: argparse.Namespace, analyzer: BrauerAnalyzer) -> int:
    form = parse_cubic_form(read_form_text(args))
    report = analyzer.survey(form, _primes(args.primes))
    emit(report, format_survey(report))
    return EXIT_OK if report.obstruction_free else EXIT_NO_VERDICT


COMMANDS = {
    "classify": cmd_classify,
    "analyze": cmd_analyze,
    "lines": cmd_lines,
    "cohomology": cmd_cohomology,
    "curve": cmd_curve,
    "survey": cmd_survey,
}


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one command.

    Args:
        argv: arguments without the program name (default: sys.argv[1:])

    Returns:
        The exit status
    """
    try:
        args = build_parser().parse_args(argv)
        try:
            configure(args)
        except ValueError as exc:
            raise InputError(f"invalid configuration: {exc}") from exc
        analyzer = BrauerAnalyzer(CubicBrauerConfig.eisenstein_precision())
        return COMMANDS[args.command](args, analyzer)
    except TheoremInapplicableError as exc:
        print(f"theorem inapplicable [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_NO_VERDICT
    except CubicBrauerError as exc:
        print(f"error [{exc.stage}]: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
