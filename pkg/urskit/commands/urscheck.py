"""urskit urscheck — repetitivity distances D(n)."""

from __future__ import annotations

from urskit.balls import urs_repetitivity
from urskit.commands.common import level_system, load_oracle
from urskit.config import RunConfig
from urskit.reports import Outcome
from urskit.utils import emit


def run(args, config: RunConfig) -> Outcome:
    oracle = load_oracle(config)
    level = config.nmax if args.level is None else args.level
    ls = level_system(config, oracle, nmax=max(level, config.nmax))
    rep = urs_repetitivity(ls, oracle, level, args.center_radius, args.max_distance, config.budget)
    emit(rep.to_dict(), config.output, "json")
    return rep.outcome
