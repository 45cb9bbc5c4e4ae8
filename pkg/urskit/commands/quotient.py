"""urskit quotient — finite-scale checks of the quotient map."""

from __future__ import annotations

from urskit.commands.common import level_system, load_oracle, report
from urskit.config import RunConfig
from urskit.groupoid import quotient_checks
from urskit.reports import Outcome


def run(args, config: RunConfig) -> Outcome:
    oracle = load_oracle(config)
    N = config.nmax if args.level is None else args.level
    ls = level_system(config, oracle, nmax=max(N, args.max_len, config.nmax))
    return report(config, [quotient_checks(ls, N, args.max_len)])
