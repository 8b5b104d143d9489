import argparse
import sys
import warnings
from typing import List, Optional

from pointless.callback import TqdmCallbackHandler
from pointless.configuration import Configuration
from pointless.engine import PointCountingRunner, PointCountingRunnerArguments
from pointless.errors import ConfigurationError, InvalidDiscriminantError, ModelError
from pointless.utils import log
from pointless.utils.io import FileIOHelper, load_curve_file

warnings.simplefilter(action="ignore", category=FutureWarning)  # disable warning output


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pointless",
        description="L-polynomials of genus-3 double covers of conics for all odd primes below N.",
    )
    parser.add_argument("--curve", type=str, required=True, help="TOML curve file.")
    parser.add_argument("--N", type=int, required=True, help="Bound on the primes.")
    parser.add_argument("--kappa", type=int, default=None, help="Remainder forest parameter. Default is 7.")
    parser.add_argument(
        "--naive-threshold",
        type=int,
        default=None,
        help="Primes below this bound are handled by point counting. Default is 256.",
    )
    parser.add_argument("--seed", type=int, default=None, help="Random seed. Default is 0.")
    parser.add_argument("--threads", type=int, default=None, help="Worker threads. Default is 1.")
    parser.add_argument("--out", type=str, default=None, help="JSON-lines output file. Default is stdout.")
    parser.add_argument(
        "--verify",
        action="store_true",
        help="Cross-check small primes with the naive oracle and large ones by annihilation.",
    )
    parser.add_argument("--stats", type=str, default=None, help="JSON file for per-prime timings and group operations.")
    parser.add_argument("--config", type=str, default=None, help="YAML file overriding the default settings.")
    parser.add_argument("--no-progress", action="store_true", help="Disable the progress bar.")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the pointless CLI.

    Returns:
        0 when the run completed, whatever the per-prime statuses; 1 on
        configuration or model errors.
    """
    args = build_parser().parse_args(argv)
    try:
        configuration = Configuration(args.config) if args.config else Configuration()
        runner_args = PointCountingRunnerArguments.from_config(
            configuration,
            N=args.N,
            kappa=args.kappa,
            naive_threshold=args.naive_threshold,
            seed=args.seed,
            threads=args.threads,
            verify=args.verify or None,
        )
        curve = load_curve_file(args.curve)
        runner = PointCountingRunner(runner_args, TqdmCallbackHandler(disable=args.no_progress))
        records = runner.run(curve, output_path=args.out)
    except (ConfigurationError, InvalidDiscriminantError, ModelError, OSError) as exc:
        log.color_print(f"error: {exc}")
        return 1

    if not args.out:
        for record in records:
            sys.stdout.write(record.to_json_line() + "\n")
    if args.stats:
        FileIOHelper.dump_json([r.stats() for r in records], args.stats)
    runner.summary()
    return 0


if __name__ == "__main__":
    sys.exit(main())
