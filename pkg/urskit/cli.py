"""
urskit — command-line dispatcher.

Parses the subcommand, merges config.yaml, the optional .env and the flags
into a RunConfig, then imports the matching module from COMMAND_MAP and calls
its run(args, config). Exit codes: 0 PASS, 1 FAIL, 2 UNDECIDED.

Usage:
    poetry run urskit classes --action integers --nmax 8
    poetry run urskit norm --kernel adjacency --radius 200
"""

from __future__ import annotations

import argparse
import importlib
import sys

from urskit.config import RunConfig, load_config
from urskit.errors import BudgetExceeded, Unsaturated, UrskitError
from urskit.reports import Outcome
from urskit.utils import get_logger, set_console_level

logger = get_logger("urskit.cli")

COMMAND_MAP: dict[str, str] = {
    "ball":     "urskit.commands.ball",
    "classes":  "urskit.commands.classes",
    "urscheck": "urskit.commands.urscheck",
    "isotropy": "urskit.commands.isotropy",
    "quotient": "urskit.commands.quotient",
    "kernel":   "urskit.commands.kernel",
    "norm":     "urskit.commands.norm",
    "propa":    "urskit.commands.propa",
    "selftest": "urskit.commands.selftest",
}

_RUN_FLAGS = ("action", "nmax", "radius", "budget", "bound", "tol", "max_iter", "out", "format")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="path to config.yaml")
    common.add_argument("--action", default=None, help="action document path or built-in name")
    common.add_argument("--nmax", type=int, default=None, help="highest classified level")
    common.add_argument("--radius", type=int, default=None, help="exploration radius")
    common.add_argument("--budget", type=int, default=None, help="vertex budget per exploration")
    common.add_argument("--bound", type=int, default=None, help="repetitivity bound D(n) for saturation")
    common.add_argument("--tol", type=float, default=None, help="numeric tolerance")
    common.add_argument("--max-iter", dest="max_iter", type=int, default=None, help="power iteration cap")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--format", choices=("json", "dot"), default=None)
    common.add_argument("--verbose", action="store_true", help="debug logging on the console")
    return common


def _kernel_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kernel", default="adjacency", help="identity, adjacency, random or a kernel JSON path")
    p.add_argument("--width", type=int, default=1, help="width of the random kernel")
    p.add_argument("--seed", type=int, default=0, help="seed of the random kernel")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="urskit", description="Finite-scale URS groupoid toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ball", parents=[common], help="canonical ball around a vertex")
    p.add_argument("--vertex", default=None, help="serialized vertex (default: base)")

    sub.add_parser("classes", parents=[common], help="classify ball types E_0..E_nmax")

    p = sub.add_parser("urscheck", parents=[common], help="repetitivity report")
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--center-radius", dest="center_radius", type=int, default=None)
    p.add_argument("--max-distance", dest="max_distance", type=int, default=None)

    p = sub.add_parser("isotropy", parents=[common], help="isotropy candidates")
    p.add_argument("--max-len", dest="max_len", type=int, default=2)

    p = sub.add_parser("quotient", parents=[common], help="checks of the quotient map")
    p.add_argument("--level", type=int, default=None)
    p.add_argument("--max-len", dest="max_len", type=int, default=2)

    p = sub.add_parser("kernel", parents=[common], help="local kernels")
    p.add_argument("op", choices=("show", "identities", "norm"))
    _kernel_flags(p)

    p = sub.add_parser("norm", parents=[common], help="operator norm bounds")
    _kernel_flags(p)

    p = sub.add_parser("propa", parents=[common], help="property A witnesses")
    p.add_argument("op", choices=("check", "construct", "bridge"))
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=None, help="indicator radius (default n^3)")
    p.add_argument("--witness", default=None, help="witness JSON path")
    p.add_argument("--length", type=int, default=None, help="arrow length budget L")

    sub.add_parser("selftest", parents=[common], help="identity suites on the configured action")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_console_level("DEBUG")
    try:
        config = load_config(args.config)
        if not args.verbose:
            set_console_level(str(config.get("log_level", "INFO")))
        overrides = {("output" if k == "out" else k): getattr(args, k) for k in _RUN_FLAGS}
        run = RunConfig.from_sources(config, overrides)

        module_path = COMMAND_MAP[args.command]
        logger.info("Running command: %s", args.command)
        mod = importlib.import_module(module_path)
        outcome: Outcome = mod.run(args, run)
    except (Unsaturated, BudgetExceeded) as exc:
        logger.error("Undecided: %s", exc)
        return Outcome.UNDECIDED.exit_code
    except UrskitError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return Outcome.FAIL.exit_code
    logger.info("%s finished: %s", args.command, outcome.value)
    return outcome.exit_code


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
