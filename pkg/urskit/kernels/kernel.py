"""
Local kernels as class-keyed tables.

A LocalKernel stored at level N holds K(x, y) for y in B_N(x) as
entries[(class of x at level N, index of y in that ball)]. Values are
Gaussian rationals so every algebraic identity can be checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from urskit.actions.oracles import ActionOracle, Vertex
from urskit.actions.region import explore
from urskit.balls.ball_type import type_in_region
from urskit.balls.levels import LevelSystem
from urskit.errors import ConfigError, LevelMismatch, NotLocal
from urskit.groupoid.functions import GroupoidFunction
from urskit.kernels.gaussian import ZERO, Gaussian
from urskit.utils import get_logger, parallel_map

logger = get_logger("urskit.kernels")

Entries = dict[tuple[int, int], Gaussian]


@dataclass
class LocalKernel:
    width: int
    level_hash: str
    entries: Entries = field(default_factory=dict)

    def get(self, c: int, j: int) -> Gaussian:
        return self.entries.get((c, j), ZERO)

    def nonzero(self) -> "LocalKernel":
        return LocalKernel(self.width, self.level_hash, {k: v for k, v in self.entries.items() if v})

    def __len__(self) -> int:
        return len(self.entries)


def _check(ls: LevelSystem, *kernels: LocalKernel) -> None:
    for K in kernels:
        if K.level_hash != ls.oracle_hash:
            raise LevelMismatch(f"kernel built over {K.level_hash}, level system is {ls.oracle_hash}")


# ── built-in kernels ─────────────────────────────────────────────────────────

def identity_kernel(ls: LevelSystem) -> LocalKernel:
    return LocalKernel(0, ls.oracle_hash, {(c, 0): Gaussian(1) for c in range(len(ls.level(0)))})


def adjacency_kernel(ls: LevelSystem) -> LocalKernel:
    """A(x, y) = number of symbols q with q.x = y (loops count at the root)."""
    entries: Entries = {}
    for c, t in enumerate(ls.level(1).classes):
        for j in t.neighbors[0]:
            entries[(c, j)] = entries.get((c, j), ZERO) + 1
    return LocalKernel(1, ls.oracle_hash, entries)


def random_kernel(ls: LevelSystem, width: int, rng: np.random.Generator,
                  density: float = 0.5, bound: int = 3) -> LocalKernel:
    """Sparse kernel with small Gaussian-integer entries."""
    entries: Entries = {}
    for c, t in enumerate(ls.level(width).classes):
        for j in range(len(t)):
            if rng.random() < density:
                re, im = (int(x) for x in rng.integers(-bound, bound + 1, size=2))
                if re or im:
                    entries[(c, j)] = Gaussian(re, im)
    return LocalKernel(width, ls.oracle_hash, entries)


# ── linear structure ─────────────────────────────────────────────────────────

def lift(ls: LevelSystem, K: LocalKernel, M: int) -> LocalKernel:
    """Re-key K at the finer level M >= width."""
    _check(ls, K)
    if M < K.width:
        raise ValueError(f"cannot lift width {K.width} to level {M}")
    if M == K.width:
        return K
    ls.require_saturated(M)
    entries: Entries = {}
    for c in range(len(ls.level(M))):
        rc = ls.restrict_class(M, c, K.width)
        for j in range(len(ls.ball(K.width, rc))):
            v = K.entries.get((rc, j))
            if v:
                entries[(c, j)] = v
    return LocalKernel(M, K.level_hash, entries)


def add(ls: LevelSystem, K: LocalKernel, L: LocalKernel) -> LocalKernel:
    _check(ls, K, L)
    M = max(K.width, L.width)
    a, b = lift(ls, K, M), lift(ls, L, M)
    entries = dict(a.entries)
    for key, v in b.entries.items():
        entries[key] = entries.get(key, ZERO) + v
    return LocalKernel(M, K.level_hash, entries).nonzero()


def scale(lam: int | Gaussian, K: LocalKernel) -> LocalKernel:
    return LocalKernel(K.width, K.level_hash, {k: v * lam for k, v in K.entries.items()}).nonzero()


def kernels_equal(ls: LevelSystem, K: LocalKernel, L: LocalKernel) -> bool:
    _check(ls, K, L)
    M = max(K.width, L.width)
    a, b = lift(ls, K, M).nonzero(), lift(ls, L, M).nonzero()
    return a.entries == b.entries


def sup_norm(K: LocalKernel) -> float:
    return max((abs(v) for v in K.entries.values()), default=0.0)


# ── products ─────────────────────────────────────────────────────────────────

def convolve(ls: LevelSystem, K: LocalKernel, L: LocalKernel) -> LocalKernel:
    """(KL)(x, y) = sum over z of K(x, z) L(z, y), stored at level N_K + N_L.

    L(z, y) is read from the N_L-ball of z taken inside the class's ball, which
    contains it since depth(z) <= N_K. Raises Unsaturated unless E_0..E_P
    are complete, since a missing class would drop its rows silently.
    """
    _check(ls, K, L)
    N, M = K.width, L.width
    P = N + M
    ls.require_saturated(P)

    def _row(c: int) -> Entries:
        ball = ls.ball(P, c)
        kc = ls.restrict_class(P, c, N)
        out: Entries = {}
        for z in range(ball.size_at(N)):
            k = K.entries.get((kc, z))
            if not k:
                continue
            sub, order = ball.sub_ball(z, M)
            lc = ls.class_of(M, sub)
            for j, y in enumerate(order):
                v = L.entries.get((lc, j))
                if v:
                    out[(c, y)] = out.get((c, y), ZERO) + k * v
        return out

    entries: Entries = {}
    for row in parallel_map(_row, range(len(ls.level(P)))):
        entries.update(row)
    return LocalKernel(P, K.level_hash, entries).nonzero()


def adjoint(ls: LevelSystem, K: LocalKernel) -> LocalKernel:
    """K*(x, y) = conj K(y, x), stored at level 2N."""
    _check(ls, K)
    N = K.width
    P = 2 * N
    ls.require_saturated(P)
    entries: Entries = {}
    for c in range(len(ls.level(P))):
        ball = ls.ball(P, c)
        for y in range(ball.size_at(N)):
            sub, order = ball.sub_ball(y, N)
            v = K.entries.get((ls.class_of(N, sub), order.index(0)))
            if v:
                entries[(c, y)] = v.conjugate()
    return LocalKernel(P, K.level_hash, entries)


def support_depth(ls: LevelSystem, K: LocalKernel) -> int:
    return max((ls.ball(K.width, c).depth[j] for (c, j), v in K.entries.items() if v), default=-1)


def reduce_width(ls: LevelSystem, K: LocalKernel) -> LocalKernel:
    """Re-key K at the smallest level on which it is still well defined.

    Consistency is only meaningful over a complete E_width, so levels up to
    the stored width must be saturated.
    """
    _check(ls, K)
    ls.require_saturated(K.width)
    K = K.nonzero()
    for n in range(max(support_depth(ls, K), 0), K.width + 1):
        table: Entries = {}
        consistent = True
        for c in range(len(ls.level(K.width))):
            rc = ls.restrict_class(K.width, c, n)
            for j in range(ls.ball(K.width, c).size_at(n)):
                v = K.get(c, j)
                key = (rc, j)
                if key in table and table[key] != v:
                    consistent = False
                    break
                table[key] = v
            if not consistent:
                break
        if consistent:
            if n < K.width:
                logger.debug("Width reduced from %d to %d", K.width, n)
            return LocalKernel(n, K.level_hash, table).nonzero()
    return K


# ── evaluation ───────────────────────────────────────────────────────────────

def eval_kernel(ls: LevelSystem, K: LocalKernel, oracle: ActionOracle, u: Vertex, v: Vertex,
                budget: int = 200_000) -> Gaussian:
    """K(u, v) from the type of u's ball; 0 when d(u, v) > width."""
    _check(ls, K)
    region = explore(oracle.with_base(u), K.width, budget)
    t, order = type_in_region(region, 0, K.width)
    c = ls.class_of(K.width, t)
    rid = region.index.get(v)
    if rid is None:
        return ZERO
    return K.get(c, order.index(rid))


# ── dictionary with groupoid functions ───────────────────────────────────────

def to_groupoid_function(ls: LevelSystem, K: LocalKernel, M: int | None = None) -> GroupoidFunction:
    """f_K on F_M: f_K(x, gamma) = K(x, gamma.x), zero at infinity."""
    lifted = lift(ls, K, K.width if M is None else M)
    return GroupoidFunction(lifted.width, dict(lifted.entries), ZERO)


def from_groupoid_function(ls: LevelSystem, f: GroupoidFunction) -> LocalKernel:
    """K_f(p, gamma.p) = f(class of p, gamma); needs f(infinity) = 0."""
    if f.infinity_value != 0:
        raise NotLocal(f"function takes {f.infinity_value} at infinity")
    return LocalKernel(f.level, ls.oracle_hash,
                       {k: Gaussian.coerce(v) for k, v in f.values.items() if v != 0})


# ── documents ────────────────────────────────────────────────────────────────

def kernel_to_dict(K: LocalKernel) -> dict:
    return {
        "level_system": K.level_hash,
        "width": K.width,
        "entries": [
            {"class": c, "target": j, **v.to_dict()}
            for (c, j), v in sorted(K.entries.items())
        ],
    }


def kernel_from_dict(doc: dict) -> LocalKernel:
    try:
        entries = {
            (int(e["class"]), int(e["target"])): Gaussian.parse(e.get("re", 0), e.get("im", 0))
            for e in doc["entries"]
        }
        return LocalKernel(int(doc["width"]), str(doc["level_system"]), entries)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed kernel document: {exc}") from exc
