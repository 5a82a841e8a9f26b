"""Command-line entry point: ``python -m descartes_lab <command>``.

Exit codes: 0 ok, 1 failed check or IO error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from functools import partial
from pathlib import Path
from typing import Any, Optional, Sequence

from pydantic import ValidationError

from descartes_lab import __version__
from descartes_lab.criteria.classify import classify
from descartes_lab.oracle.search import make_searcher
from descartes_lab.reports.catalog import build_catalog, reverify_rows, write_catalog
from descartes_lab.reports.suites import SUITES, run_suite
from descartes_lab.signs.patterns import AdmissiblePair, SignPattern, parse_pattern, require_admissible
from descartes_lab.utils.errors import DescartesLabError
from descartes_lab.utils.guard import GuardCheckResult, RequestGuard
from descartes_lab.utils.logging import configure_logging
from descartes_lab.utils.settings import LabSettings, get_settings
from descartes_lab.witness.base import witness_or_none
from descartes_lab.witness.builder import witness_for

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _require(check: GuardCheckResult) -> None:
    if not check.allowed:
        raise UsageError(check.reason)


def _emit(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _couple(args: argparse.Namespace, guard: RequestGuard) -> tuple[SignPattern, AdmissiblePair]:
    _require(guard.validate_degree(args.degree))
    _require(guard.validate_pattern_text(args.pattern))
    try:
        sigma = parse_pattern(args.pattern, args.degree)
        ap = AdmissiblePair.from_text(args.ap)
        require_admissible(sigma, ap)
    except DescartesLabError as exc:
        raise UsageError(str(exc)) from exc
    return sigma, ap


def _searcher(args: argparse.Namespace, settings: LabSettings, guard: RequestGuard):
    if not args.search:
        return None
    budget = settings.oracle_budget if args.budget is None else args.budget
    _require(guard.validate_budget(budget))
    seed = settings.seed if args.seed is None else args.seed
    return make_searcher(args.search, seed=seed, budget=budget, workers=settings.threads)


def cmd_classify(args: argparse.Namespace, settings: LabSettings, guard: RequestGuard) -> int:
    sigma, ap = _couple(args, guard)
    search = _searcher(args, settings, guard)
    result = classify(
        sigma,
        ap,
        with_witness=True,
        search=search,
        builder=partial(witness_for, budget=settings.halving_budget),
        width=settings.enclosure_width,
    )
    _emit(result.to_dict())
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace, settings: LabSettings, guard: RequestGuard) -> int:
    if args.reverify is not None:
        try:
            payload = json.loads(Path(args.reverify).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            sys.stderr.write(f"Cannot read catalog {args.reverify}: {exc}\n")
            return EXIT_FAILED
        failures = reverify_rows(payload)
        for failure in failures:
            sys.stderr.write(f"witness does not certify: {failure}\n")
        return EXIT_FAILED if failures else EXIT_OK

    if args.degree is None:
        raise UsageError("catalog needs -d/--degree")
    _require(guard.validate_degree(args.degree, catalog=True))
    catalog = build_catalog(
        args.degree,
        blocks_only=args.blocks_only,
        with_witness=args.witness,
        threads=settings.threads,
        search=_searcher(args, settings, guard),
        builder=partial(witness_for, budget=settings.halving_budget),
        width=settings.enclosure_width,
    )
    if args.out is None:
        sys.stdout.write(catalog.render(args.format))
        return EXIT_OK
    try:
        write_catalog(catalog, args.out, args.format)
    except OSError as exc:
        sys.stderr.write(f"Cannot write {args.out}: {exc}\n")
        return EXIT_FAILED
    return EXIT_OK


def cmd_witness(args: argparse.Namespace, settings: LabSettings, guard: RequestGuard) -> int:
    sigma, ap = _couple(args, guard)
    witness = witness_or_none(witness_for, sigma, ap, budget=settings.halving_budget)
    if witness is None:
        search = _searcher(args, settings, guard)
        witness = search(sigma, ap) if search is not None else None
    if witness is None:
        sys.stderr.write(f"No witness for {sigma.text} with {ap}\n")
        return EXIT_FAILED
    _emit(witness.to_dict())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: LabSettings, guard: RequestGuard) -> int:
    _require(guard.validate_degree(args.max_degree))
    seed = settings.seed if args.seed is None else args.seed
    report = run_suite(
        args.suite,
        threads=settings.threads,
        seed=seed,
        max_degree=args.max_degree,
        trials=args.trials,
    )
    _emit(report.to_dict())
    for failure in report.failures:
        sys.stderr.write(f"FAILED {failure}\n")
    logger.info("Suite %s: %d checks, %d failures", report.suite, report.total, len(report.failures))
    return EXIT_OK if report.passed else EXIT_FAILED


def _add_couple_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-d", "--degree", type=int, required=True, help="Polynomial degree")
    parser.add_argument("-s", "--pattern", required=True, help='Sign pattern "+--+" or "S(m,n,q)"')
    parser.add_argument("-a", "--ap", required=True, help="Admissible pair as pos,neg")


def _add_search_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--search", choices=["grid", "random"], default=None, help="Fallback witness search")
    parser.add_argument("--budget", type=int, default=None, help="Candidate budget of the search")
    parser.add_argument("--seed", type=int, default=None, help="Seed of the random search")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="descartes-lab",
        description="Realizability of sign patterns and admissible pairs, in exact arithmetic.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    classify_parser = commands.add_parser("classify", help="Classify one couple")
    _add_couple_flags(classify_parser)
    _add_search_flags(classify_parser)
    classify_parser.set_defaults(handler=cmd_classify)

    catalog_parser = commands.add_parser("catalog", help="Classify every couple of one degree")
    catalog_parser.add_argument("-d", "--degree", type=int, default=None, help="Polynomial degree")
    catalog_parser.add_argument("--blocks-only", action="store_true", help="Only three-block patterns")
    catalog_parser.add_argument("--witness", action="store_true", help="Attach witnesses to Realizable rows")
    catalog_parser.add_argument("--format", choices=["json", "csv"], default="json")
    catalog_parser.add_argument("--out", type=Path, default=None, help="Output file (default stdout)")
    catalog_parser.add_argument("--reverify", type=Path, default=None, help="Re-certify the witnesses of a JSON catalog")
    _add_search_flags(catalog_parser)
    catalog_parser.set_defaults(handler=cmd_catalog)

    witness_parser = commands.add_parser("witness", help="Build a certified witness")
    _add_couple_flags(witness_parser)
    _add_search_flags(witness_parser)
    witness_parser.set_defaults(handler=cmd_witness)

    verify_parser = commands.add_parser("verify", help="Run a verification battery")
    verify_parser.add_argument("suite", choices=SUITES)
    verify_parser.add_argument("--max-degree", type=int, default=30, help="Upper degree of thm2-sweep")
    verify_parser.add_argument("--seed", type=int, default=None, help="Seed of the inequalities battery")
    verify_parser.add_argument("--trials", type=int, default=10000, help="Trials of the inequalities battery")
    verify_parser.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = get_settings()
    except ValidationError as exc:
        sys.stderr.write(f"Invalid configuration: {exc}\n")
        return EXIT_USAGE
    configure_logging(settings.log_level, verbose=args.verbose)
    guard = RequestGuard(settings)
    try:
        return args.handler(args, settings, guard)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except DescartesLabError as exc:
        logger.warning("%s failed: %s", args.command, exc)
        sys.stderr.write(f"{exc}\n")
        return EXIT_FAILED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
