"""
Matching pi(K) on the Schreier graph against pi(f_K) on a groupoid fiber,
and transporting vectors between fibers of units with equal ball types.
"""

from __future__ import annotations

from collections import defaultdict

from urskit.actions.oracles import ActionOracle, Vertex
from urskit.actions.region import explore
from urskit.balls.ball_type import BallType, type_in_region
from urskit.balls.levels import LevelSystem
from urskit.errors import BijectionFailure, LevelMismatch, PrecisionExhausted
from urskit.groupoid.arrows import ArrowClass, compose, invert_arrow
from urskit.kernels.gaussian import ZERO, Gaussian
from urskit.kernels.kernel import LocalKernel, to_groupoid_function
from urskit.representation.truncate import truncate
from urskit.reports import CheckReport, Outcome
from urskit.utils import get_logger

logger = get_logger("urskit.intertwiner")


def intertwiner_check(ls: LevelSystem, K: LocalKernel, oracle: ActionOracle, R: int,
                      budget: int = 200_000) -> CheckReport:
    """Compare pi(K) with pi(f_K) on the fiber over the base, on B_{R - w}.

    Vertex p corresponds to the arrow a_p from p to the base. The fiber
    matrix entry at (p, q) is f_K(a_p composed with a_q^-1), which must equal
    K(p, q) exactly.
    """
    w = K.width
    inner = R - w
    if inner < 0:
        raise PrecisionExhausted(f"radius {R} is smaller than width {w}")
    M = 2 * inner + w
    if M > ls.n_max:
        raise PrecisionExhausted(f"intertwining at radius {R} needs level {M}, have {ls.n_max}")

    op = truncate(ls, K, oracle, R, budget)
    region = explore(oracle, inner + M, budget)
    interior = region.within(inner)

    arrows: list[ArrowClass] = []
    for p in interior:
        t, order = type_in_region(region, p, M)
        arrows.append(ArrowClass(M, ls.class_of(M, t), order.index(0)))
    if len(set(arrows)) != len(arrows):
        raise BijectionFailure("two interior vertices map to the same arrow")
    inverses = [invert_arrow(ls, a) for a in arrows]

    f = to_groupoid_function(ls, K)
    mismatches = []
    for p, a_p in zip(interior, arrows):
        for q, a_q_inv in zip(interior, inverses):
            value = f.value(ls, compose(ls, a_p, a_q_inv))
            if value != op.get(p, q):
                mismatches.append({"p": oracle.serialize(region.vertices[p]),
                                   "q": oracle.serialize(region.vertices[q]),
                                   "fiber": repr(value), "graph": repr(op.get(p, q))})
    logger.info("Intertwiner at R=%d: %d interior vertices, %d mismatches", R, len(interior), len(mismatches))
    return CheckReport("intertwiner", Outcome.of(not mismatches),
                       {"radius": R, "width": w, "level": M, "interior": len(interior),
                        "entries_compared": len(interior) ** 2}, mismatches)


# ── fiber transport ──────────────────────────────────────────────────────────

def _fiber_image(ls: LevelSystem, K: LocalKernel, oracle: ActionOracle, y: Vertex, N: int,
                 h: dict[int, Gaussian], budget: int) -> tuple[BallType, dict[int, Gaussian]]:
    """(type of B_{N+2w}(y), pi_y(f_K) h indexed by canonical ball position)."""
    w = K.width
    big = N + 2 * w
    region = explore(oracle.with_base(y), big, budget)
    t, order = type_in_region(region, 0, big)
    position = {rid: i for i, rid in enumerate(order)}
    image: dict[int, Gaussian] = {}
    for i in range(t.size_at(N + w)):
        tx, ox = type_in_region(region, order[i], w)
        c = ls.class_of(w, tx)
        total = ZERO
        for pos, rid in enumerate(ox):
            j = position[rid]
            if j in h:
                total = total + K.get(c, pos) * h[j]
        if total:
            image[i] = total
    return t, image


def _default_vector(t: BallType, N: int) -> dict[int, Gaussian]:
    return {i: Gaussian(1 + i % 3, i % 2) for i in range(t.size_at(N))}


def fiber_transport_check(ls: LevelSystem, K: LocalKernel, N: int, y: Vertex, y2: Vertex,
                          oracle: ActionOracle, h: dict[int, Gaussian] | None = None,
                          budget: int = 200_000) -> CheckReport:
    """Transport h on B_N(y) to B_N(y2) by canonical index and compare images.

    Image entries at depth <= N are always compared. Entries at depth in
    (N, N + w] also depend on the (N + 2w)-balls and are compared only when
    those agree.
    """
    w = K.width
    L = N + w
    t1 = explore(oracle.with_base(y), N + 2 * w, budget)
    t2 = explore(oracle.with_base(y2), N + 2 * w, budget)
    b1 = type_in_region(t1, 0, N + 2 * w)[0]
    b2 = type_in_region(t2, 0, N + 2 * w)[0]
    if b1.restrict_to(L) != b2.restrict_to(L):
        raise LevelMismatch(f"units differ at level {L}")
    if h is None:
        h = _default_vector(b1, N)
    if any(b1.depth[i] > N for i in h):
        raise ValueError(f"vector must be supported on B_{N}")

    _, image1 = _fiber_image(ls, K, oracle, y, N, h, budget)
    _, image2 = _fiber_image(ls, K, oracle, y2, N, h, budget)
    outer = b1 == b2
    reach = L if outer else N
    mismatches = []
    for i in set(image1) | set(image2):
        if b1.depth[i] > reach:
            continue
        if image1.get(i, ZERO) != image2.get(i, ZERO):
            mismatches.append({"index": i, "depth": b1.depth[i],
                               "at_y": repr(image1.get(i, ZERO)), "at_y2": repr(image2.get(i, ZERO))})

    # h' on B_N(y2) reads h at the same canonical index; both balls have size_at(N) positions
    size = b2.size_at(N)
    moved = {i: v for i, v in h.items() if i < size}
    norm_h = sum((v.abs2() for v in h.values()), start=0)
    norm_moved = sum((v.abs2() for v in moved.values()), start=0)
    preserved = norm_h == norm_moved
    if not preserved:
        mismatches.append({"vector_norm2": [str(norm_h), str(norm_moved)]})
    details = {
        "level": L,
        "outer_compared": outer,
        "vector_norm2": str(norm_h),
        "transported_norm2": str(norm_moved),
        "norm_preserved": preserved,
    }
    if outer:
        n1 = sum((v.abs2() for v in image1.values()), start=0)
        n2 = sum((v.abs2() for v in image2.values()), start=0)
        details["image_norm2"] = [str(n1), str(n2)]
        if n1 != n2:
            mismatches.append({"image_norm2": [str(n1), str(n2)]})
    return CheckReport("fiber-transport", Outcome.of(not mismatches), details, mismatches)


def find_matching_units(oracle: ActionOracle, level: int, radius: int,
                        budget: int = 200_000) -> list[tuple[Vertex, Vertex]]:
    """Pairs of distinct vertices within `radius` of the base sharing their level-ball type."""
    region = explore(oracle, radius + level, budget)
    groups: dict[BallType, list[int]] = defaultdict(list)
    for i in region.within(radius):
        groups[type_in_region(region, i, level)[0]].append(i)
    return [(region.vertices[ids[0]], region.vertices[ids[1]]) for ids in groups.values() if len(ids) > 1]
