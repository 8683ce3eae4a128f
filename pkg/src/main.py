"""
CLI entry point for chebroot

Usage:
    python -m src.main classify 1 0 -5 0 5 0 --json
    python -m src.main quartic 1 0 -2 0 0.5
    python -m src.main plot-f 1 0 -5 0 5 0 --samples 5
    python -m src.main sweep --alpha 0:0:1 --beta=-4:-4:1 --gamma=-2.5:-2.5:1
    python -m src.main oracle 1 0 -5 1 2 5
    python -m src.main concordance --samples 1000 --plots

Exit codes: 0 success, 2 invalid input, 3 method not applicable, 64 usage.
"""
from concurrent.futures import ProcessPoolExecutor
from math import isfinite, pi
from pathlib import Path
from typing import List, Optional, Sequence, Tuple
import argparse
import logging
import sys

import numpy as np

from . import config
from .classifier.classifier import classify, classify_parameters, sweep_grid
from .classifier.quartic import classify_general_quartic
from .exceptions import InvalidInput, MethodNotApplicable, ZeroPolynomial
from .formatter import (
    format_oracle, format_report, report_csv, samples_csv, sweep_csv, to_json,
)
from .polynomial.oracle import analyze
from .polynomial.poly_core import MonicQuintic, Poly, depress
from .trig.reduction import reduce, sample_f

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NOT_APPLICABLE = 3
EXIT_USAGE = 64


class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with EX_USAGE (64)"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_coefficients(values: Sequence[str]) -> List[float]:
    """
    Decimal strings to finite floats.

    Raises:
        InvalidInput: a value is not a finite decimal number
    """
    out = []
    for raw in values:
        try:
            value = float(raw)
        except ValueError:
            raise InvalidInput(f"coefficient {raw!r} is not a number") from None
        if not isfinite(value):
            raise InvalidInput(f"coefficient {raw!r} is not finite")
        out.append(value)
    return out


def parse_range(text: str) -> Tuple[float, float, int]:
    """`lo:hi:n` with finite lo, hi and n >= 1 (argparse type)"""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected lo:hi:n, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi:n, got {text!r}") from None
    if not (isfinite(lo) and isfinite(hi)):
        raise argparse.ArgumentTypeError(f"range bounds must be finite, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"steps must be >= 1, got {n}")
    return lo, hi, n


def _sample_count(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError(f"theta samples must be >= 2, got {n}")
    return n


def _output_format(args) -> str:
    return "json" if getattr(args, "json", False) else args.format


def _sweep_point(point: Tuple[float, float, float, Optional[float]]):
    alpha, beta, gamma, eps = point
    return classify_parameters(alpha, beta, gamma, eps_tangent=eps)


def cmd_classify(args) -> int:
    q = MonicQuintic.from_coefficients(parse_coefficients(args.coefficients))
    report = classify(q, eps_tangent=args.eps_tangent, u_min=args.u_min)
    _emit_report(report, _output_format(args), args.verbose)
    return EXIT_OK


def cmd_quartic(args) -> int:
    report = classify_general_quartic(parse_coefficients(args.coefficients),
                                      eps_tangent=args.eps_tangent, u_min=args.u_min)
    _emit_report(report, _output_format(args), args.verbose)
    return EXIT_OK


def _emit_report(report, fmt: str, verbose: bool) -> None:
    if fmt == "json":
        print(to_json(report))
    elif fmt == "csv":
        sys.stdout.write(report_csv(report))
    else:
        print(format_report(report, verbose=verbose))


def cmd_plot_f(args) -> int:
    q = MonicQuintic.from_coefficients(parse_coefficients(args.coefficients))
    try:
        r = reduce(depress(q))
    except MethodNotApplicable as e:
        print(f"plot-f: {e.reason}; f(theta) is undefined here. "
              "Use `classify`, which falls back to the Sturm oracle.", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    thetas = np.linspace(0.0, pi, args.samples)
    sys.stdout.write(samples_csv(thetas, sample_f(r, thetas)))
    return EXIT_OK


def cmd_sweep(args) -> int:
    points = [(a, b, g, args.eps_tangent) for a, b, g in sweep_grid(args.alpha, args.beta, args.gamma)]
    logger.info("Sweeping %d grid points with %d worker(s)", len(points), args.workers)
    if args.workers > 1:
        # map() yields in submission order, so rows stay in grid order
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_sweep_point, points, chunksize=64))
    else:
        rows = [_sweep_point(p) for p in points]
    sys.stdout.write(sweep_csv(rows))
    return EXIT_OK


def cmd_oracle(args) -> int:
    P = Poly.from_descending(parse_coefficients(args.coefficients))
    if P.is_zero():
        raise ZeroPolynomial("the zero polynomial has no finite root set")
    if P.degree == 0:
        raise InvalidInput("a nonzero constant has no roots; give a polynomial of degree 1 to 5")
    report = analyze(P)
    if _output_format(args) == "json":
        print(to_json(report))
    else:
        print(format_oracle(report))
    return EXIT_OK


def cmd_concordance(args) -> int:
    from .evaluation.experiments import ExperimentRunner
    from .evaluation.visualization import ResultsVisualizer

    output_dir = Path(args.output or config.EVALUATION_OUTPUT_DIR)
    runner = ExperimentRunner(samples=args.samples, seed=args.seed)
    results = runner.run_all()
    path = runner.save_results(output_dir / "concordance_results.json")

    for name in ("quintic_concordance", "quartic_concordance"):
        evaluation = results[name]
        print(f"{name}: agreement {evaluation['agreement_rate']:.6f}, "
              f"flagged {evaluation['flagged_rate']:.6f}, "
              f"total {evaluation['timing']['total']:.2f}s")
    passed = sum(1 for g in results["golden_examples"] if g["passed"])
    print(f"golden examples: {passed}/{len(results['golden_examples'])} passed")
    print(f"results: {path}")

    if args.plots:
        visualizer = ResultsVisualizer(output_dir / "plots")
        visualizer.plot_concordance(results["quintic_concordance"],
                                    output_dir / "plots" / "quintic_concordance.png")
        visualizer.plot_concordance(results["quartic_concordance"],
                                    output_dir / "plots" / "quartic_concordance.png")
        visualizer.plot_sweep_strata(0.0, (-10.0, 10.0), (-10.0, 10.0))
    return EXIT_OK


def _add_report_options(parser: argparse.ArgumentParser, csv: bool = True) -> None:
    parser.add_argument("--json", action="store_true", help="JSON output (same as --format json)")
    choices = ["text", "json", "csv"] if csv else ["text", "json"]
    parser.add_argument("--format", choices=choices, default="text", help="output format")


def _add_tolerance_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--eps-tangent", type=float, default=None,
                        help="absolute tangency threshold (overrides CHEBROOT_EPS_TANGENT)")
    parser.add_argument("--u-min", type=float, default=None,
                        help="scale u below which the oracle is used")


def build_parser() -> CliParser:
    parser = CliParser(prog="chebroot",
                       description="Real-root classification of quintics by trigonometric reduction")
    common = CliParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true",
                        help="INFO logging on stderr and extended text output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a quintic a5 a4 a3 a2 a1 a0")
    p.add_argument("coefficients", nargs=6, metavar="a")
    _add_report_options(p)
    _add_tolerance_options(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("quartic", parents=[common], help="classify a quartic a4 a3 a2 a1 a0 (depressed internally)")
    p.add_argument("coefficients", nargs=5, metavar="a")
    _add_report_options(p)
    _add_tolerance_options(p)
    p.set_defaults(handler=cmd_quartic)

    p = sub.add_parser("plot-f", parents=[common], help="CSV samples of f(theta) on [0, pi]")
    p.add_argument("coefficients", nargs=6, metavar="a")
    p.add_argument("--samples", type=_sample_count, default=config.THETA_SAMPLES)
    p.set_defaults(handler=cmd_plot_f)

    p = sub.add_parser("sweep", parents=[common], help="interior zero counts over an (alpha, beta, gamma) grid")
    p.add_argument("--alpha", type=parse_range, required=True, metavar="lo:hi:n")
    p.add_argument("--beta", type=parse_range, required=True, metavar="lo:hi:n")
    p.add_argument("--gamma", type=parse_range, required=True, metavar="lo:hi:n")
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.add_argument("--eps-tangent", type=float, default=None)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("oracle", parents=[common], help="Sturm count and roots of a degree 1-5 polynomial")
    p.add_argument("coefficients", nargs="+", metavar="a")
    _add_report_options(p, csv=False)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("concordance", parents=[common], help="seeded oracle-concordance experiments")
    p.add_argument("--samples", type=int, default=config.CONCORDANCE_SAMPLES)
    p.add_argument("--seed", type=int, default=config.CONCORDANCE_SEED)
    p.add_argument("--output", type=str, default=None, help="results directory")
    p.add_argument("--plots", action="store_true", help="also write matplotlib plots")
    p.set_defaults(handler=cmd_concordance)
    return parser


def cli(argv: Optional[Sequence[str]] = None) -> int:
    """Command-line interface; returns the process exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if args.command == "oracle" and len(args.coefficients) > 6:
        parser.error("oracle takes 1 to 6 coefficients")
    if args.command == "sweep" and args.workers < 1:
        parser.error("--workers must be >= 1")
    if args.command == "concordance" and args.samples < 1:
        parser.error("--samples must be >= 1")

    try:
        return args.handler(args)
    except (InvalidInput, ZeroPolynomial) as e:
        print(f"chebroot: invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
