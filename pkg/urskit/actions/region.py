"""
Breadth-first exploration of a Schreier graph around the base vertex.

Explored vertices are interned as integer ids in BFS order (symbols are
visited in declared order, so the order is deterministic). nbr[id][q] is the
id of q.v, or None when q.v lies outside the explored radius.
"""

from __future__ import annotations

from dataclasses import dataclass

from urskit.actions.oracles import ActionOracle, Vertex
from urskit.errors import BudgetExceeded
from urskit.utils import get_logger

logger = get_logger("urskit.region")


@dataclass
class SchreierRegion:
    oracle: ActionOracle
    radius: int
    vertices: list[Vertex]
    index: dict[Vertex, int]
    dist: list[int]
    nbr: list[list[int | None]]

    def __len__(self) -> int:
        return len(self.vertices)

    def step(self, i: int, q: int) -> int | None:
        return self.nbr[i][q]

    def within(self, radius: int) -> list[int]:
        """Ids at distance <= radius from the base (a prefix in BFS order)."""
        return [i for i, d in enumerate(self.dist) if d <= radius]

    def bfs_from(self, start: int, radius: int) -> dict[int, int]:
        """Distances from `start` inside the region, up to `radius`."""
        seen = {start: 0}
        frontier = [start]
        for depth in range(1, radius + 1):
            nxt = []
            for i in frontier:
                for j in self.nbr[i]:
                    if j is not None and j not in seen:
                        seen[j] = depth
                        nxt.append(j)
            if not nxt:
                break
            frontier = nxt
        return seen


def explore(oracle: ActionOracle, radius: int, budget: int = 200_000) -> SchreierRegion:
    """Explore B_radius(base); raises BudgetExceeded past `budget` vertices."""
    k = oracle.generators.size
    vertices: list[Vertex] = [oracle.base]
    index: dict[Vertex, int] = {oracle.base: 0}
    dist = [0]
    nbr: list[list[int | None]] = [[None] * k]

    frontier = [0]
    for depth in range(1, radius + 1):
        nxt = []
        for i in frontier:
            v = vertices[i]
            for q in range(k):
                w = oracle.apply(q, v)
                j = index.get(w)
                if j is None:
                    j = len(vertices)
                    if j >= budget:
                        raise BudgetExceeded(budget, radius)
                    index[w] = j
                    vertices.append(w)
                    dist.append(depth)
                    nbr.append([None] * k)
                    nxt.append(j)
                nbr[i][q] = j
        frontier = nxt
        if not frontier:
            break

    # outermost layer: only links back into the region
    for i in frontier:
        v = vertices[i]
        for q in range(k):
            nbr[i][q] = index.get(oracle.apply(q, v))

    logger.debug("Explored %d vertices to radius %d", len(vertices), radius)
    return SchreierRegion(oracle, radius, vertices, index, dist, nbr)
