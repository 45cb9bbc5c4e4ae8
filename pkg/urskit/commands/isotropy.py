"""urskit isotropy — words fixing a ball type while moving the root."""

from __future__ import annotations

from urskit.balls import isotropy_scan
from urskit.commands.common import level_system, load_oracle
from urskit.config import RunConfig
from urskit.reports import Outcome
from urskit.utils import emit


def run(args, config: RunConfig) -> Outcome:
    oracle = load_oracle(config)
    ls = level_system(config, oracle)
    candidates = isotropy_scan(ls, args.max_len)
    emit({
        "level": ls.n_max,
        "max_len": args.max_len,
        "candidates": [c.to_dict(ls) for c in candidates],
    }, config.output, "json")
    # candidates are evidence, their absence proves nothing; unsaturated levels raise before this
    return Outcome.PASS
