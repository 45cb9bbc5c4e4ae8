"""urskit classes — the level system E_0..E_nmax."""

from __future__ import annotations

from urskit.balls import level_system_to_dict
from urskit.commands.common import level_system, load_oracle
from urskit.config import RunConfig
from urskit.reports import Outcome
from urskit.utils import emit


def run(args, config: RunConfig) -> Outcome:
    oracle = load_oracle(config)
    ls = level_system(config, oracle)
    doc = level_system_to_dict(ls, oracle)
    doc["sizes"] = ls.sizes()
    emit(doc, config.output, "json")
    return Outcome.PASS if ls.saturated_to(ls.n_max) else Outcome.UNDECIDED
