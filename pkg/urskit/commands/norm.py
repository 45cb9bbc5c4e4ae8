"""urskit norm — certified bounds for the operator norm of pi(K)."""

from __future__ import annotations

from urskit.commands.common import kernel_setup, load_oracle
from urskit.config import RunConfig
from urskit.reports import Outcome
from urskit.representation import norm_estimate, truncate
from urskit.utils import emit


def run(args, config: RunConfig) -> Outcome:
    oracle = load_oracle(config)
    ls, K = kernel_setup(args, config, oracle)
    op = truncate(ls, K, oracle, config.radius, config.budget)
    estimate = norm_estimate(ls, K, op, config.tol, config.max_iter)
    emit(estimate.to_dict(), config.output, "json")
    return Outcome.of(estimate.sandwich_ok)
