"""
Exact identity checks for the kernel *-algebra and the kernel/function dictionary.
"""

from __future__ import annotations

import itertools
from typing import Callable

from urskit.actions.oracles import ActionOracle
from urskit.actions.region import explore
from urskit.balls.ball_type import type_in_region
from urskit.balls.levels import LevelSystem
from urskit.errors import PrecisionExhausted, Unsaturated
from urskit.groupoid.functions import adjoint_function, convolve_functions
from urskit.kernels.kernel import (
    LocalKernel,
    add,
    adjoint,
    convolve,
    eval_kernel,
    from_groupoid_function,
    identity_kernel,
    kernels_equal,
    reduce_width,
    to_groupoid_function,
)
from urskit.reports import CheckReport, Outcome
from urskit.utils import get_logger

logger = get_logger("urskit.dictionary")


def star(ls: LevelSystem, K: LocalKernel) -> LocalKernel:
    return reduce_width(ls, adjoint(ls, K))


def times(ls: LevelSystem, K: LocalKernel, L: LocalKernel) -> LocalKernel:
    return reduce_width(ls, convolve(ls, K, L))


def _identities(ls: LevelSystem, kernels: dict[str, LocalKernel]) -> dict[str, Callable[[], bool]]:
    delta = identity_kernel(ls)
    checks: dict[str, Callable[[], bool]] = {}
    for name, K in kernels.items():
        checks[f"{name}**={name}"] = lambda K=K: kernels_equal(ls, star(ls, star(ls, K)), K)
        checks[f"d*{name}={name}"] = lambda K=K: kernels_equal(ls, times(ls, delta, K), K)
        checks[f"{name}*d={name}"] = lambda K=K: kernels_equal(ls, times(ls, K, delta), K)
        checks[f"f({name}*)=f({name})*"] = lambda K=K: to_groupoid_function(ls, star(ls, K)).equals(
            ls, adjoint_function(ls, to_groupoid_function(ls, K)))
        checks[f"K(f({name}))={name}"] = lambda K=K: kernels_equal(
            ls, from_groupoid_function(ls, to_groupoid_function(ls, K)), K)

    for (a, K), (b, L) in itertools.product(kernels.items(), repeat=2):
        checks[f"({a}{b})*={b}*{a}*"] = lambda K=K, L=L: kernels_equal(
            ls, star(ls, times(ls, K, L)), times(ls, star(ls, L), star(ls, K)))
        checks[f"f({a}{b})=f({a})f({b})"] = lambda K=K, L=L: to_groupoid_function(ls, times(ls, K, L)).equals(
            ls, convolve_functions(ls, to_groupoid_function(ls, K), to_groupoid_function(ls, L)))
        checks[f"({a}+{b})d={a}d+{b}d"] = lambda K=K, L=L: kernels_equal(
            ls, times(ls, add(ls, K, L), delta), add(ls, times(ls, K, delta), times(ls, L, delta)))

    for (a, K), (b, L), (c, M) in itertools.product(kernels.items(), repeat=3):
        checks[f"({a}{b}){c}={a}({b}{c})"] = lambda K=K, L=L, M=M: kernels_equal(
            ls, times(ls, times(ls, K, L), M), times(ls, K, times(ls, L, M)))
        checks[f"{a}({b}+{c})={a}{b}+{a}{c}"] = lambda K=K, L=L, M=M: kernels_equal(
            ls, times(ls, K, add(ls, L, M)), add(ls, times(ls, K, L), times(ls, K, M)))
    return checks


def _eval_consistency(ls: LevelSystem, K: LocalKernel, oracle: ActionOracle, radius: int,
                      budget: int) -> bool:
    """eval_kernel on concrete vertex pairs agrees with the class table."""
    region = explore(oracle, radius + K.width + 1, budget)
    for i in region.within(radius):
        u = region.vertices[i]
        t, order = type_in_region(region, i, K.width)
        c = ls.class_of(K.width, t)
        for j, d in region.bfs_from(i, K.width + 1).items():
            value = eval_kernel(ls, K, oracle, u, region.vertices[j], budget)
            expected = K.get(c, order.index(j)) if d <= K.width else 0
            if value != expected:
                return False
    return True


def identity_suite(ls: LevelSystem, kernels: dict[str, LocalKernel], oracle: ActionOracle | None = None,
                   eval_radius: int = 2, budget: int = 200_000) -> CheckReport:
    """Run every *-algebra and dictionary identity over `kernels`.

    Identities whose products need levels beyond the level system, or levels
    that are not saturated, are skipped and listed; the outcome is UNDECIDED
    when nothing failed but some were skipped.
    """
    results: dict[str, bool] = {}
    skipped: list[str] = []
    for name, check in _identities(ls, kernels).items():
        try:
            results[name] = check()
        except (PrecisionExhausted, Unsaturated) as exc:
            logger.debug("Skipped %s: %s", name, exc)
            skipped.append(name)
    if oracle is not None:
        for name, K in kernels.items():
            try:
                results[f"eval({name})"] = _eval_consistency(ls, K, oracle, eval_radius, budget)
            except Unsaturated as exc:
                logger.debug("Skipped eval(%s): %s", name, exc)
                skipped.append(f"eval({name})")

    failed = sorted(name for name, ok in results.items() if not ok)
    if failed:
        outcome = Outcome.FAIL
    elif skipped:
        outcome = Outcome.UNDECIDED
    else:
        outcome = Outcome.PASS
    logger.info("Identity suite: %d passed, %d failed, %d skipped",
                len(results) - len(failed), len(failed), len(skipped))
    return CheckReport(
        "kernel-identities",
        outcome,
        {"passed": sorted(n for n, ok in results.items() if ok), "failed": failed, "skipped": skipped},
        [{"identity": name} for name in failed],
    )
