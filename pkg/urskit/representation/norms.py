"""
Certified operator-norm bounds for pi(K).

The lower bound is the largest singular value of the interior column block,
found by power iteration on B^H B. For vectors supported on B_{R - w} the
truncated action equals the full action, so ||B x|| for any unit x is a true
lower bound for ||pi(K)||, whether or not the iteration converged.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from urskit.balls.levels import LevelSystem
from urskit.errors import ExplorationError, PrecisionExhausted, Unsaturated
from urskit.kernels.kernel import LocalKernel, adjoint, reduce_width, sup_norm
from urskit.representation.truncate import TruncatedOperator, interior_block
from urskit.utils import get_logger

logger = get_logger("urskit.norms")


@dataclass
class LowerBound:
    value: float
    iterations: int
    converged: bool
    residual: float


@dataclass
class NormEstimate:
    lower: float
    upper_schur: float
    upper_coarse: float
    upper_sharper: float
    radius: int
    width: int
    iterations: int
    converged: bool
    column_sums: str = "classes"

    @property
    def sharper_violated(self) -> bool:
        return self.lower > self.upper_sharper * (1 + 1e-12)

    @property
    def sandwich_ok(self) -> bool:
        return self.lower <= min(self.upper_schur, self.upper_coarse) * (1 + 1e-12)

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper_schur": self.upper_schur,
            "upper_coarse": self.upper_coarse,
            "upper_sharper": self.upper_sharper,
            "sharper_violated": self.sharper_violated,
            "sandwich_ok": self.sandwich_ok,
            "method": {
                "lower": "power iteration on the interior column block",
                "radius": self.radius,
                "width": self.width,
                "iterations": self.iterations,
                "converged": self.converged,
                "column_sums": self.column_sums,
            },
        }


def norm_lower_bound(op: TruncatedOperator, margin: int | None = None, tol: float = 1e-9,
                     max_iter: int = 100_000) -> LowerBound:
    """||B x|| for the power-iteration vector x of B^H B, seeded with all ones.

    Stops once ||B^H B x - lam x|| <= tol * lam. Hitting max_iter still
    returns a valid lower bound, with converged=False.
    """
    w = op.width if margin is None else margin
    if op.radius <= w and w > 0:
        raise ExplorationError(f"radius {op.radius} leaves no interior for width {w}")
    B = interior_block(op, w)
    if B.shape[1] == 0 or B.nnz == 0:
        return LowerBound(0.0, 0, True, 0.0)
    BH = B.conj().T.tocsr()
    x = np.ones(B.shape[1], dtype=B.dtype)
    x /= np.linalg.norm(x)
    residual = np.inf
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        y = BH @ (B @ x)
        lam = float(np.vdot(x, y).real)
        norm_y = np.linalg.norm(y)
        if norm_y == 0.0:
            break
        residual = float(np.linalg.norm(y - lam * x))
        if residual <= tol * lam:
            converged = True
            break
        x = y / norm_y
    if not converged:
        logger.warning("Power iteration stopped after %d steps (residual %.3e)", it, residual)
    value = float(np.linalg.norm(B @ x))
    return LowerBound(value, it, converged, residual)


def _row_sums(ls: LevelSystem, K: LocalKernel) -> list[float]:
    sums = [0.0] * len(ls.level(K.width))
    for (c, _), v in K.entries.items():
        sums[c] += abs(v)
    return sums


def norm_upper_bounds(ls: LevelSystem, K: LocalKernel,
                      op: TruncatedOperator | None = None) -> tuple[float, float, float, str]:
    """(Schur bound, (|Q|+1)^N sup|K|, (|Q|+1)^(N/2) sup|K|, column-sum source).

    Row sums are class-constant; column sums are the row sums of K*. When the
    level system cannot hold K*, the interior columns of `op` are used instead.
    """
    K = reduce_width(ls, K)
    k = ls.generators.size
    rows = max(_row_sums(ls, K), default=0.0)
    source = "classes"
    try:
        cols = max(_row_sums(ls, reduce_width(ls, adjoint(ls, K))), default=0.0)
    except (Unsaturated, PrecisionExhausted) as exc:
        if op is None:
            raise
        logger.warning("Column sums taken from the truncation: %s", exc)
        B = interior_block(op, op.width)
        cols = float(abs(B).sum(axis=0).max()) if B.shape[1] else 0.0
        source = "truncation"
    sup = sup_norm(K)
    schur = float(np.sqrt(rows * cols))
    return schur, (k + 1) ** K.width * sup, (k + 1) ** (K.width / 2) * sup, source


def norm_estimate(ls: LevelSystem, K: LocalKernel, op: TruncatedOperator, tol: float = 1e-9,
                  max_iter: int = 100_000) -> NormEstimate:
    lower = norm_lower_bound(op, op.width, tol, max_iter)
    schur, coarse, sharper, source = norm_upper_bounds(ls, K, op)
    estimate = NormEstimate(lower.value, schur, coarse, sharper, op.radius, op.width,
                            lower.iterations, lower.converged, source)
    if estimate.sharper_violated:
        logger.warning("Lower bound %.6f exceeds the square-root bound %.6f", lower.value, sharper)
    logger.info("Norm at R=%d: %.9f <= ||pi(K)|| <= %.9f", op.radius, lower.value, min(schur, coarse))
    return estimate
