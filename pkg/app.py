"""
Higher-Order Pattern Miner - Command-Line Application

This is the entry layer of the toolkit. It parses arguments, loads the
basket file, runs the requested miner or analysis through MiningService and
writes deterministic output.

Run with: python app.py <subcommand> --input FILE [options]
"""

import argparse
import json
import re
import sys
import traceback
from fractions import Fraction
from typing import List, Optional, Sequence

from config import Config, get_config
from constraints import pretty_print
from curves import curve_to_record, export_curve_csv
from database import load_basket_path
from errors import MiningError, MiningParameterError
from hypergraph import export_json, export_many_dot
from measures import measure_names
from miners import MiningParams
from services import MiningService
from utils.logger import MiningLogger

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

_DECIMAL = re.compile(r"\d+(?:\.\d*)?|\.\d+")


class UsageError(Exception):
    """Raised instead of argparse's SystemExit so run() can pick the status."""


class CliArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


# ============================================================================
# ARGUMENT TYPES
# ============================================================================

def _decimal(text: str) -> Fraction:
    if not _DECIMAL.fullmatch(text.strip()):
        raise argparse.ArgumentTypeError(f"{text!r} is not a decimal number")
    return Fraction(text.strip())


def ratio_threshold(text: str) -> Fraction:
    """Support threshold in (0, 1]."""
    value = _decimal(text)
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"{text} is outside (0, 1]")
    return value


def unit_threshold(text: str) -> Fraction:
    """Support threshold in [0, 1]."""
    value = _decimal(text)
    if value > 1:
        raise argparse.ArgumentTypeError(f"{text} is outside [0, 1]")
    return value


def positive_threshold(text: str) -> Fraction:
    value = _decimal(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text} must be greater than 0")
    return value


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} must be at least 1")
    return value


def measure_name(text: str) -> str:
    if text not in measure_names():
        raise argparse.ArgumentTypeError(f"unknown measure {text!r}; expected one of {', '.join(measure_names())}")
    return text


def label_list(text: str) -> List[str]:
    labels = [label.strip() for label in text.split(",")]
    if not labels or any(not label for label in labels):
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of item labels")
    return labels


# ============================================================================
# PARSER CONFIGURATION
# ============================================================================

def _io_flags(parser: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    parser.add_argument("--input", required=True, metavar="PATH", help="basket file, one transaction per line")
    parser.add_argument("--output", metavar="PATH", help="write results here instead of standard output")
    parser.add_argument("--format", choices=formats, default=formats[0], help="output format")


def _minsup(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument(
        "--minsup", type=ratio_threshold, required=required, metavar="R",
        help="minisupport: minimum support ratio in (0, 1]",
    )


def _indirect_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--ts", type=unit_threshold, required=required, metavar="R",
                        help="t_s: itempair support threshold; pairs below it are rare")
    parser.add_argument("--tf", type=unit_threshold, required=required, metavar="R",
                        help="t_f: mediator support threshold for {a} u M and {b} u M")
    parser.add_argument("--td", type=_decimal, required=required, metavar="R",
                        help="t_d: mediator dependence threshold for d({a}, M) and d({b}, M)")
    parser.add_argument("--measure", type=measure_name, default=Config.DEFAULT_DEPENDENCE_MEASURE,
                        metavar="NAME", help="dependence measure d (default: %(default)s)")
    parser.add_argument("--max-mediator", type=positive_int, default=Config.DEFAULT_MAX_MEDIATOR_LEN,
                        metavar="K", help="max_mediator_len: longest mediator set (default: %(default)s)")


def _correlation_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mincorr", type=positive_threshold, required=True, metavar="R",
                        help="min_correlation: lift (col) threshold")
    parser.add_argument("--max-len", type=positive_int, default=Config.DEFAULT_MAX_LEN, metavar="K",
                        help="max_pattern_len: longest pattern examined (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(prog="hopminer", description=f"{Config.APP_NAME}: {Config.APP_DESCRIPTION}")
    commands = parser.add_subparsers(dest="command", metavar="SUBCOMMAND", parser_class=CliArgumentParser)
    commands.required = True

    frequent = commands.add_parser("frequent", help="frequent patterns")
    _io_flags(frequent, ["json"])
    _minsup(frequent)
    frequent.add_argument("--max-len", type=positive_int, metavar="K",
                          help="max_pattern_len: longest pattern reported (default: unlimited)")

    closed = commands.add_parser("closed", help="frequent closed patterns")
    _io_flags(closed, ["json"])
    _minsup(closed)
    closed.add_argument("--compression", action="store_true",
                        help="only closed patterns sharing their support with a proper sub-pattern")

    maximal = commands.add_parser("maximal", help="maximal frequent patterns")
    _io_flags(maximal, ["json"])
    _minsup(maximal)

    clique = commands.add_parser("clique", help="maximal clique patterns")
    _io_flags(clique, ["json"])
    _minsup(clique)

    biclique = commands.add_parser("biclique", help="maximal bi-clique patterns")
    _io_flags(biclique, ["json"])
    _minsup(biclique)
    biclique.add_argument("--min-side", type=positive_int, default=Config.DEFAULT_MIN_SIDE, metavar="K",
                          help="min_side: smallest side size (default: %(default)s)")

    for name, text in (("indirect", "indirect associations"), ("star", "star patterns")):
        sub = commands.add_parser(name, help=text)
        _io_flags(sub, ["json"])
        _indirect_flags(sub)

    allcorr = commands.add_parser("allcorr", help="all-correlation patterns")
    _io_flags(allcorr, ["json"])
    _correlation_flags(allcorr)

    unexpected = commands.add_parser("unexpected", help="unexpected-correlation patterns")
    _io_flags(unexpected, ["json"])
    _correlation_flags(unexpected)
    unexpected.add_argument("--include-pairs", action="store_true",
                            help="also report two-item patterns")

    evaluate = commands.add_parser("eval", help="evaluate a constraint on one pattern")
    _io_flags(evaluate, ["json"])
    evaluate.add_argument("--pattern", type=label_list, required=True, metavar="L1,L2,...",
                          help="pattern X as comma-separated item labels")
    evaluate.add_argument("--constraint", required=True, metavar="STRING", help="constraint formula over sub(X)")
    evaluate.add_argument("--explain", action="store_true", help="include canonical formula and witnesses")

    ihg = commands.add_parser("ihg", help="Item Hyper-Graph export")
    _io_flags(ihg, ["json", "dot"])
    ihg.add_argument("--pattern", type=label_list, metavar="L1,L2,...",
                     help="pattern X as comma-separated item labels (with --constraint)")
    ihg.add_argument("--constraint", metavar="STRING",
                     help="hyperedge condition, e.g. 'col(S) >= 1.5 and len(S) >= 2'")
    ihg.add_argument("--from", dest="source", default="constraint",
                     choices=MiningService.GRAPH_KINDS + ("constraint",),
                     help="draw every result of this miner, or one pattern under --constraint (default)")
    _minsup(ihg, required=False)
    ihg.add_argument("--min-side", type=positive_int, default=Config.DEFAULT_MIN_SIDE, metavar="K",
                     help="min_side for --from biclique (default: %(default)s)")
    _indirect_flags(ihg, required=False)

    curve = commands.add_parser("curve", help="sub-pattern interestingness curve")
    _io_flags(curve, ["csv", "json"])
    curve.add_argument("--pattern", type=label_list, required=True, metavar="L1,L2,...",
                       help="pattern X as comma-separated item labels")
    curve.add_argument("--measure", type=measure_name, default=Config.DEFAULT_CURVE_MEASURE, metavar="NAME",
                       help="measure on the Y axis (default: %(default)s)")

    return parser


# ============================================================================
# COMMAND HANDLERS
# ============================================================================

def _params(args: argparse.Namespace) -> MiningParams:
    values = {}
    mapping = {
        "minsup": "minisupport", "mincorr": "min_correlation",
        "ts": "t_s", "tf": "t_f", "td": "t_d",
        "max_len": "max_pattern_len", "max_mediator": "max_mediator_len",
        "min_side": "min_side", "measure": "dependence_measure", "include_pairs": "include_pairs",
    }
    for flag, field_name in mapping.items():
        value = getattr(args, flag, None)
        if value is not None and not (args.command == "curve" and flag == "measure"):
            values[field_name] = value
    return MiningParams(**values)


def _json_lines(records: List[dict]) -> str:
    return "".join(json.dumps(record, ensure_ascii=False) + "\n" for record in records)


def _run_eval(service: MiningService, args: argparse.Namespace) -> str:
    scoped, pattern, ast, trace = service.evaluate(args.pattern, args.constraint)
    record = {"verdict": trace.verdict, "pattern": sorted(scoped.db.labels_of(pattern))}
    if args.explain:
        record["constraint"] = pretty_print(ast)
        record["witnesses"] = [sorted(scoped.db.labels_of(w)) for w in trace.sorted_witnesses()]
    return json.dumps(record, ensure_ascii=False) + "\n"


def _run_ihg(service: MiningService, args: argparse.Namespace) -> str:
    if args.source != "constraint" and (args.constraint or args.pattern):
        raise UsageError(f"ihg --from {args.source} does not take --pattern or --constraint\n")
    if args.source != "constraint":
        missing = [flag for flag, needed in (
            ("--minsup", args.source in ("clique", "biclique") and args.minsup is None),
            ("--ts/--tf/--td", args.source in ("indirect", "star")
             and None in (args.ts, args.tf, args.td)),
        ) if needed]
        if missing:
            raise UsageError(f"ihg --from {args.source} needs {', '.join(missing)}\n")
        graphs = service.graphs(args.source)
    else:
        if not (args.pattern and args.constraint):
            raise UsageError("ihg: --pattern and --constraint are required for --from constraint\n")
        graphs = [service.hypergraph(args.pattern, args.constraint)]

    if args.format == "dot":
        return export_many_dot(graphs)
    return "".join(export_json(graph) + "\n" for graph in graphs)


def _run_curve(service: MiningService, args: argparse.Namespace) -> str:
    curve = service.curve(args.pattern, args.measure)
    if args.format == "csv":
        return export_curve_csv(curve)
    return json.dumps(curve_to_record(curve), ensure_ascii=False) + "\n"


def execute(args: argparse.Namespace) -> str:
    """Run one parsed invocation and return its output text."""
    db = load_basket_path(args.input)
    service = MiningService(db, _params(args))

    if args.command == "eval":
        return _run_eval(service, args)
    if args.command == "ihg":
        return _run_ihg(service, args)
    if args.command == "curve":
        return _run_curve(service, args)
    if args.command == "closed" and args.compression:
        return _json_lines(service.compression_records())
    return _json_lines(service.records(args.command))


def _write(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


# ============================================================================
# MAIN APPLICATION
# ============================================================================

def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Execute one command-line invocation.

    Returns:
        0 on success, 1 on usage errors, 2 on data or constraint errors.
    """
    logger = MiningLogger.get_logger(__name__)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        get_config()
        logger.info(f"Invocation: {args.command} on {args.input}")
        _write(execute(args), args.output)
        return EXIT_OK
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return EXIT_USAGE
    except MiningParameterError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (MiningError, OSError) as exc:
        MiningLogger.log_error(type(exc).__name__, str(exc), traceback.format_exc())
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DATA


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
