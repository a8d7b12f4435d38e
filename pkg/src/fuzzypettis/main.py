"""Main entry point for the fuzzypettis command-line tool."""

import argparse
import sys
from typing import List, Optional

import yaml

from . import __version__
from .cli import ExitCode, cmd_decompose, cmd_integrate, cmd_plot_data, cmd_verify, exit_code_for
from .config import Config
from .utils.logger import setup_logger


class TailAction(argparse.Action):
    """Parse ``--tail Q N`` into a (float ratio, int length) pair."""

    def __call__(self, parser, namespace, values, option_string=None):
        ratio, count = values
        try:
            setattr(namespace, self.dest, (float(ratio), int(count)))
        except ValueError:
            parser.error(
                f"{option_string} expects a ratio and an integer length, got {ratio} {count}"
            )


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with the four subcommands."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML configuration file")
    common.add_argument("--tol", type=float, help="distance solver tolerance")
    common.add_argument("--grid", type=int, help="direction grid size")
    common.add_argument("--out", help="output directory for CSV files")
    common.add_argument(
        "--prune", action="store_true", help="reduce Minkowski sums to extreme points"
    )

    parser = argparse.ArgumentParser(
        prog="fuzzypettis",
        description="Fuzzy Pettis integrals of simple fuzzy mappings on finite measure spaces",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    integrate = commands.add_parser(
        "integrate", parents=[common], help="integrate a scenario over a set"
    )
    integrate.add_argument("scenario", help="scenario JSON file")
    integrate.add_argument("--set", default="all", help="'all', 'none' or comma-separated atom ids")

    decompose = commands.add_parser(
        "decompose", parents=[common], help="split a scenario around a canonical selection"
    )
    decompose.add_argument("scenario", help="scenario JSON file")
    decompose.add_argument("--direction", help="comma-separated direction, default first axis")

    verify = commands.add_parser(
        "verify", parents=[common], help="run the structural check suite"
    )
    verify.add_argument("scenario", help="scenario JSON file")
    verify.add_argument("--with-oracle", action="store_true", help="add brute-force oracle checks")
    verify.add_argument(
        "--tail", nargs=2, metavar=("Q", "N"), action=TailAction,
        help="geometric tail family ratio and length"
    )
    verify.add_argument("--seed", type=int, help="seed for every random choice")

    plot = commands.add_parser(
        "plot-data", parents=[common], help="emit level polygons and a membership grid"
    )
    plot.add_argument("scenario", help="scenario JSON file")
    plot.add_argument("--set", help="plot the integral over this set instead of the atoms")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, configure logging and dispatch to a subcommand."""
    args = build_parser().parse_args(argv)

    try:
        config = Config(args.config)
    except (OSError, ValueError, yaml.YAMLError) as e:
        code = exit_code_for(e)
        print(f"❌ Error loading configuration: {e}", file=sys.stderr)
        return int(code)

    setup_logger(config.logging)
    if args.prune:
        config.set("solver.prune_vertices", True)

    if args.command == "integrate":
        code = cmd_integrate(args.scenario, args.set, args.out, config, args.grid, args.tol)
    elif args.command == "decompose":
        code = cmd_decompose(args.scenario, args.direction, args.out, config, args.grid, args.tol)
    elif args.command == "verify":
        code = cmd_verify(
            args.scenario, args.with_oracle, args.tail, args.seed, args.out, config,
            args.grid, args.tol
        )
    elif args.command == "plot-data":
        code = cmd_plot_data(args.scenario, args.out, args.set, config, args.tol)
    else:
        code = ExitCode.VALIDATION

    return int(code)


if __name__ == "__main__":
    sys.exit(main())
