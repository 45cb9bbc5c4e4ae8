"""urskit selftest — identity suites and bridges on the configured action."""

from __future__ import annotations

import numpy as np

from urskit.amenability import ball_indicator_witness, forward_bridge
from urskit.commands.common import level_system, load_oracle, report
from urskit.config import RunConfig
from urskit.groupoid import quotient_checks
from urskit.kernels import adjacency_kernel, identity_kernel, identity_suite, random_kernel
from urskit.reports import CheckReport, Outcome
from urskit.representation import intertwiner_check
from urskit.utils import get_logger

logger = get_logger("urskit.selftest")


def run(args, config: RunConfig) -> Outcome:
    oracle = load_oracle(config)
    ls = level_system(config, oracle, nmax=max(config.nmax, 10))
    if not ls.saturated_to(ls.n_max):
        # every check below reads classes up to n_max
        logger.warning("Levels are not saturated to %d, nothing to test against", ls.n_max)
        levels = CheckReport("levels", Outcome.UNDECIDED,
                             {"sizes": ls.sizes(), "saturated": [level.saturated for level in ls.levels]})
        return report(config, [levels])

    A = adjacency_kernel(ls)
    kernels = {
        "d": identity_kernel(ls),
        "A": A,
        "K": random_kernel(ls, 1, np.random.default_rng(0)),
    }
    reports = [
        identity_suite(ls, kernels, oracle, budget=config.budget),
        quotient_checks(ls, 4, 3),
        intertwiner_check(ls, A, oracle, 4, config.budget),
        forward_bridge(ls, ball_indicator_witness(ls, 2, 8), tol=config.tol),
    ]
    return report(config, reports)
