"""Helpers shared by the command modules."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from urskit.actions import ActionOracle, load_action
from urskit.balls import LevelSystem, classify
from urskit.config import RunConfig
from urskit.errors import ConfigError
from urskit.kernels import (
    LocalKernel,
    adjacency_kernel,
    identity_kernel,
    kernel_from_dict,
    random_kernel,
)
from urskit.reports import CheckReport, Outcome, combine
from urskit.utils import emit, get_logger, load_json

logger = get_logger("urskit.cli")

BUILTIN_KERNELS = ("identity", "adjacency", "random")


def load_oracle(run: RunConfig) -> ActionOracle:
    return load_action(run.action)


def level_system(run: RunConfig, oracle: ActionOracle, nmax: int | None = None,
                 radius: int | None = None) -> LevelSystem:
    nmax = run.nmax if nmax is None else nmax
    radius = max(run.radius if radius is None else radius, nmax)
    return classify(oracle, nmax, radius, run.budget, run.bound)


def resolve_kernel(ls: LevelSystem, name: str, width: int = 1, seed: int = 0) -> LocalKernel:
    """A built-in kernel by name, or a kernel document path."""
    if name == "identity":
        return identity_kernel(ls)
    if name == "adjacency":
        return adjacency_kernel(ls)
    if name == "random":
        return random_kernel(ls, width, np.random.default_rng(seed))
    path = Path(name)
    if not path.exists():
        raise ConfigError(f"unknown kernel {name!r}, expected {BUILTIN_KERNELS} or a document path")
    return kernel_from_dict(load_json(path))


def report(run: RunConfig, reports: list[CheckReport], extra: dict | None = None) -> Outcome:
    """Emit the reports as one JSON document and return the combined outcome."""
    outcome = combine(r.outcome for r in reports)
    for r in reports:
        logger.info("%s", r)
    payload = {"outcome": outcome.value, "reports": [r.to_dict() for r in reports]}
    if extra:
        payload.update(extra)
    emit(payload, run.output, "json")
    return outcome


def kernel_setup(args, run: RunConfig, oracle: ActionOracle, factor: int = 2) -> tuple[LevelSystem, LocalKernel]:
    """Classify deep enough for `factor` times the kernel width, then build the kernel."""
    ls = level_system(run, oracle, nmax=max(run.nmax, factor * max(args.width, 1)))
    K = resolve_kernel(ls, args.kernel, args.width, args.seed)
    if factor * K.width > ls.n_max:
        ls = level_system(run, oracle, nmax=factor * K.width)
        K = resolve_kernel(ls, args.kernel, args.width, args.seed)
    return ls, K
