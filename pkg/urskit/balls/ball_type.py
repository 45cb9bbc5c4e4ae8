"""
Canonical forms of rooted, labeled balls.

A BallType stores the induced subgraph on B_n(v) as a labeled adjacency
table over canonically ordered vertices. Vertex 0 is the root; the others
are sorted by their shortlex-least representative word, which sorts them by
depth first. neighbors[i][q] is the index of q.v_i, or -1 when that vertex
lies outside the ball (edges between two depth-n vertices are kept).

Root-label isomorphisms of balls are unique when they exist, and the
canonical order is defined through labels only, so two vertices have equal
BallTypes exactly when their n-balls are root-label isomorphic.

Restricting to radius m < n keeps the first |B_m| vertices in the same order,
so a vertex index means the same ball vertex at every level where it exists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Hashable

from urskit.actions.oracles import ActionOracle, Vertex
from urskit.actions.region import explore
from urskit.actions.words import GeneratorSystem, Word, word_enumerate, word_index
from urskit.errors import ExplorationError

Step = Callable[[Hashable, int], "Hashable | None"]


@dataclass(frozen=True, eq=False)
class BallType:
    radius: int
    neighbors: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...] = field(init=False, repr=False)
    parent: tuple[tuple[int, int], ...] = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        n = len(self.neighbors)
        depth = [-1] * n
        depth[0] = 0
        parent = [(-1, -1)] * n
        frontier = [0]
        while frontier:
            nxt = []
            for j in frontier:
                for q, i in enumerate(self.neighbors[j]):
                    if i >= 0 and depth[i] < 0:
                        depth[i] = depth[j] + 1
                        nxt.append(i)
            frontier = nxt
        for j in range(n):
            for q, i in enumerate(self.neighbors[j]):
                if i >= 0 and depth[i] == depth[j] + 1:
                    if parent[i] == (-1, -1) or (q, j) < parent[i]:
                        parent[i] = (q, j)
        object.__setattr__(self, "depth", tuple(depth))
        object.__setattr__(self, "parent", tuple(parent))
        object.__setattr__(self, "_hash", hash((self.radius, self.neighbors)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BallType):
            return NotImplemented
        return self._hash == other._hash and self.radius == other.radius and self.neighbors == other.neighbors

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.neighbors)

    @property
    def degree(self) -> int:
        return len(self.neighbors[0])

    # ── words ────────────────────────────────────────────────────────────────

    def locate(self, word: Word) -> int | None:
        """Index of word.root, or None if the walk leaves the ball."""
        i = 0
        for q in reversed(word):
            i = self.neighbors[i][q]
            if i < 0:
                return None
        return i

    def walk(self, start: int, word: Word) -> int | None:
        """Index of word.v_start, or None if the walk leaves the ball."""
        i = start
        for q in reversed(word):
            i = self.neighbors[i][q]
            if i < 0:
                return None
        return i

    def representative(self, i: int) -> Word:
        """Shortlex-least word reaching vertex i from the root."""
        letters = []
        while i:
            q, i = self.parent[i]
            letters.append(q)
        return tuple(letters)

    def partition_table(self, gs: GeneratorSystem) -> list[int]:
        """word-index -> word-index of its class representative, over W_radius."""
        table = []
        for w in word_enumerate(gs, self.radius):
            i = self.locate(w)
            table.append(word_index(gs, self.representative(i)))
        return table

    def boundary_edges(self) -> set[tuple[int, int, int]]:
        """Labeled edges between two vertices of depth exactly radius."""
        edges = set()
        for i, row in enumerate(self.neighbors):
            if self.depth[i] != self.radius:
                continue
            for q, j in enumerate(row):
                if j >= 0 and self.depth[j] == self.radius:
                    edges.add((i, q, j))
        return edges

    # ── restriction and sub-balls ────────────────────────────────────────────

    def size_at(self, m: int) -> int:
        """|B_m(root)| for m <= radius."""
        return sum(1 for d in self.depth if d <= m)

    def restrict_to(self, m: int) -> "BallType":
        if not 0 <= m <= self.radius:
            raise ValueError(f"cannot restrict radius {self.radius} to {m}")
        if m == self.radius:
            return self
        count = self.size_at(m)
        rows = tuple(
            tuple(j if 0 <= j < count else -1 for j in row)
            for row in self.neighbors[:count]
        )
        return BallType(m, rows)

    def sub_ball(self, center: int, r: int) -> tuple["BallType", list[int]]:
        """Canonical B_r(v_center) and the map sub-index -> index in this ball."""
        if self.depth[center] + r > self.radius:
            raise ExplorationError(
                f"sub-ball of radius {r} at depth {self.depth[center]} exceeds radius {self.radius}")
        rows = self.neighbors

        def step(i: int, q: int) -> int | None:
            j = rows[i][q]
            return j if j >= 0 else None

        return canonical_ball(center, r, step, self.degree)

    def sub_type(self, center: int, r: int) -> "BallType":
        return self.sub_ball(center, r)[0]

    # ── serialization ────────────────────────────────────────────────────────

    def serialize(self) -> str:
        return json.dumps([self.radius, [list(row) for row in self.neighbors]], separators=(",", ":"))

    @classmethod
    def parse(cls, text: str) -> "BallType":
        radius, rows = json.loads(text)
        return cls(int(radius), tuple(tuple(int(j) for j in row) for row in rows))


def canonical_ball(root: Hashable, radius: int, step: Step, k: int) -> tuple[BallType, list]:
    """Layered BFS that orders each new layer by (first letter, parent rank).

    `step(v, q)` returns the neighbor q.v or None when it is unknown. Returns
    the BallType and the list mapping canonical index -> original vertex.
    """
    order = [root]
    pos = {root: 0}
    layer = [root]
    for d in range(1, radius + 1):
        keys: dict[Hashable, tuple[int, int]] = {}
        for rank, j in enumerate(layer):
            for q in range(k):
                u = step(j, q)
                if u is None:
                    raise ExplorationError(f"neighbor {q} of a depth-{d - 1} vertex is unknown")
                if u in pos:
                    continue
                key = (q, rank)
                if u not in keys or key < keys[u]:
                    keys[u] = key
        layer = sorted(keys, key=keys.__getitem__)
        for u in layer:
            pos[u] = len(order)
            order.append(u)
        if not layer:
            break

    rows = []
    for u in order:
        row = []
        for q in range(k):
            w = step(u, q)
            row.append(pos.get(w, -1) if w is not None else -1)
        rows.append(tuple(row))
    return BallType(radius, tuple(rows)), order


def type_in_region(region, i: int, n: int) -> tuple[BallType, list[int]]:
    """Canonical n-ball of region vertex i (needs dist(i) + n <= region radius)."""
    return canonical_ball(i, n, region.step, region.oracle.generators.size)


def ball_type(oracle: ActionOracle, v: Vertex, n: int, budget: int = 200_000) -> BallType:
    """BallType of the radius-n ball around v."""
    if n < 0:
        raise ValueError("radius must be non-negative")
    region = explore(oracle.with_base(v), n, budget)
    return type_in_region(region, 0, n)[0]


def restrict_type(t: BallType) -> BallType:
    """The radius-(n-1) type of a radius-n type."""
    return t.restrict_to(t.radius - 1)
