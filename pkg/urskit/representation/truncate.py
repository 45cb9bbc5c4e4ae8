"""
Truncated regular representation on l2(B_R(base)).

Entries are stored exactly as matrix[x][y] = K(x, y), the standard matrix of
(Kh)(x) = sum_y K(x, y) h(y); columns are the images of basis vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from urskit.actions.oracles import ActionOracle, Vertex
from urskit.actions.region import explore
from urskit.balls.ball_type import type_in_region
from urskit.balls.levels import LevelSystem
from urskit.errors import ExplorationError
from urskit.kernels.gaussian import ZERO, Gaussian
from urskit.kernels.kernel import LocalKernel, convolve
from urskit.reports import CheckReport, Outcome
from urskit.utils import get_logger, parallel_map

logger = get_logger("urskit.representation")


@dataclass
class TruncatedOperator:
    radius: int
    width: int
    vertices: list[Vertex]
    dist: list[int]
    entries: dict[tuple[int, int], Gaussian] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.vertices)

    def get(self, x: int, y: int) -> Gaussian:
        return self.entries.get((x, y), ZERO)

    def interior(self, margin: int) -> list[int]:
        return [i for i, d in enumerate(self.dist) if d <= self.radius - margin]

    @property
    def is_real(self) -> bool:
        return all(v.im == 0 for v in self.entries.values())

    def matrix(self) -> sparse.csr_matrix:
        n = len(self)
        dtype = float if self.is_real else complex
        if not self.entries:
            return sparse.csr_matrix((n, n), dtype=dtype)
        rows, cols = zip(*self.entries)
        data = [float(v.re) if dtype is float else complex(v) for v in self.entries.values()]
        return sparse.csr_matrix((data, (rows, cols)), shape=(n, n), dtype=dtype)

    def to_dense(self) -> np.ndarray:
        return self.matrix().toarray()


def truncate(ls: LevelSystem, K: LocalKernel, oracle: ActionOracle, R: int,
             budget: int = 200_000) -> TruncatedOperator:
    """pi(K) on B_R(base); entry (x, y) is K evaluated from the width-ball of x."""
    w = K.width
    if R < w:
        raise ExplorationError(f"radius {R} is smaller than the kernel width {w}")
    region = explore(oracle, R + w, budget)
    inside = region.within(R)

    def _row(i: int) -> dict[tuple[int, int], Gaussian]:
        t, order = type_in_region(region, i, w)
        c = ls.class_of(w, t)
        row = {}
        for pos, j in enumerate(order):
            v = K.get(c, pos)
            if v and region.dist[j] <= R:
                row[(i, j)] = v
        return row

    entries: dict[tuple[int, int], Gaussian] = {}
    for row in parallel_map(_row, inside):
        entries.update(row)
    logger.debug("Truncated width-%d kernel to %d vertices, %d entries", w, len(inside), len(entries))
    return TruncatedOperator(R, w, [region.vertices[i] for i in inside],
                             [region.dist[i] for i in inside], entries)


def interior_block(op: TruncatedOperator, margin: int) -> sparse.csr_matrix:
    """Columns of vectors supported on B_{R - margin}: there pi(K) is computed exactly."""
    return op.matrix()[:, op.interior(margin)].tocsr()


# ── finite-scale *-homomorphism checks ───────────────────────────────────────

def product_check(ls: LevelSystem, K: LocalKernel, L: LocalKernel, oracle: ActionOracle, R: int,
                  budget: int = 200_000) -> CheckReport:
    """truncate(KL) equals truncate(K) truncate(L) on rows of B_{R - N_K - N_L}."""
    tk = truncate(ls, K, oracle, R, budget)
    tl = truncate(ls, L, oracle, R, budget)
    tkl = truncate(ls, convolve(ls, K, L), oracle, R, budget)
    rows: dict[int, dict[int, Gaussian]] = {}
    for (z, y), v in tl.entries.items():
        rows.setdefault(z, {})[y] = v
    mismatches = []
    for x in tk.interior(K.width + L.width):
        product: dict[int, Gaussian] = {}
        for (xx, z), k in tk.entries.items():
            if xx != x:
                continue
            for y, v in rows.get(z, {}).items():
                product[y] = product.get(y, ZERO) + k * v
        direct = {y: v for (xx, y), v in tkl.entries.items() if xx == x}
        for y in set(product) | set(direct):
            if product.get(y, ZERO) != direct.get(y, ZERO):
                mismatches.append({"row": x, "column": y, "product": repr(product.get(y, ZERO)),
                                   "direct": repr(direct.get(y, ZERO))})
    return CheckReport("representation-product", Outcome.of(not mismatches),
                       {"radius": R, "rows": len(tk.interior(K.width + L.width))}, mismatches)


def hermitian_check(op: TruncatedOperator) -> CheckReport:
    """The interior block of a self-adjoint kernel is Hermitian."""
    inner = set(op.interior(op.width))
    bad = [
        {"row": x, "column": y}
        for (x, y), v in op.entries.items()
        if x in inner and y in inner and op.get(y, x) != v.conjugate()
    ]
    return CheckReport("representation-hermitian", Outcome.of(not bad), {"interior": len(inner)}, bad)
