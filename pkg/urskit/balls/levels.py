"""
Level systems: the finite sets E_n of ball types with connecting maps.

classify() explores B_R(base), types every vertex whose n-ball is fully
explored (distance <= R - n), deduplicates, and orders each E_n by the
serialized BallType so class ids do not depend on discovery order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from urskit.actions.oracles import ActionOracle, Vertex
from urskit.actions.region import SchreierRegion, explore
from urskit.actions.words import GeneratorSystem
from urskit.balls.ball_type import BallType, type_in_region
from urskit.errors import BudgetExceeded, Unsaturated
from urskit.utils import get_logger, parallel_map

logger = get_logger("urskit.classify")

RepetitivityBound = Callable[[int], int]


@dataclass
class Level:
    n: int
    classes: list[BallType]
    e_map: list[int]                 # class here -> class at level n-1 (empty at level 0)
    witnesses: list[Vertex]
    saturated: bool
    explore_radius: int
    index: dict[BallType, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self.index:
            self.index = {t: i for i, t in enumerate(self.classes)}

    def __len__(self) -> int:
        return len(self.classes)


@dataclass
class LevelSystem:
    oracle_hash: str
    generators: GeneratorSystem
    levels: list[Level]

    @property
    def n_max(self) -> int:
        return len(self.levels) - 1

    def level(self, n: int) -> Level:
        if not 0 <= n < len(self.levels):
            raise Unsaturated(f"level {n} not classified (n_max = {self.n_max})")
        return self.levels[n]

    def ball(self, n: int, c: int) -> BallType:
        return self.level(n).classes[c]

    def class_of(self, n: int, t: BallType) -> int:
        try:
            return self.level(n).index[t]
        except KeyError:
            raise Unsaturated(f"ball type not present at level {n}") from None

    def restrict_class(self, n: int, c: int, m: int) -> int:
        """Follow the e-maps from level n down to level m <= n."""
        if m > n:
            raise ValueError(f"cannot restrict level {n} to finer level {m}")
        while n > m:
            c = self.levels[n].e_map[c]
            n -= 1
        return c

    def refinements(self, n: int, c: int, m: int) -> list[int]:
        """Classes at level m >= n restricting to c at level n."""
        return [d for d in range(len(self.level(m))) if self.restrict_class(m, d, n) == c]

    def sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def saturated_to(self, n: int) -> bool:
        return n <= self.n_max and all(level.saturated for level in self.levels[: n + 1])

    def require_saturated(self, n: int) -> None:
        if not self.saturated_to(n):
            raise Unsaturated(f"levels up to {n} are not saturated")


# ------------------------------------------------------------------
# typing the explored region
# ------------------------------------------------------------------

class TypeCache:
    """Memoizes restrictions so each distinct type is restricted once."""

    def __init__(self) -> None:
        self._down: dict[BallType, BallType] = {}

    def restrict(self, t: BallType) -> BallType:
        down = self._down.get(t)
        if down is None:
            down = t.restrict_to(t.radius - 1)
            self._down[t] = down
        return down

    def chain(self, t: BallType) -> list[BallType]:
        """[t_0, t_1, ..., t] for t at radius m."""
        out = [t]
        while out[-1].radius > 0:
            out.append(self.restrict(out[-1]))
        out.reverse()
        return out


def _top_level(dist: int, n_max: int, radius: int, bound: RepetitivityBound | None) -> int:
    top = min(n_max, radius - dist)
    if bound is not None:
        while top >= 0 and dist > bound(top):
            top -= 1
    return top


def type_region(region: SchreierRegion, n_max: int,
                bound: RepetitivityBound | None = None) -> list[list[BallType]]:
    """Per region vertex, its types at every level it can be typed at."""
    radius = region.radius
    cache = TypeCache()
    tops = [_top_level(d, n_max, radius, bound) for d in region.dist]

    def _top(i: int) -> BallType | None:
        if tops[i] < 0:
            return None
        return type_in_region(region, i, tops[i])[0]

    top_types = parallel_map(_top, range(len(region)))
    return [cache.chain(t) if t is not None else [] for t in top_types]


def _as_bound(bound: int | RepetitivityBound | None) -> RepetitivityBound | None:
    if bound is None or callable(bound):
        return bound
    value = int(bound)
    return lambda n: value


def _build(oracle: ActionOracle, region: SchreierRegion, n_max: int,
           bound: RepetitivityBound | None) -> list[Level]:
    table = type_region(region, n_max, bound)
    found: list[dict[BallType, int]] = [dict() for _ in range(n_max + 1)]
    for i, chain in enumerate(table):
        for n, t in enumerate(chain):
            found[n].setdefault(t, i)

    levels: list[Level] = []
    for n in range(n_max + 1):
        ordered = sorted(found[n], key=BallType.serialize)
        index = {t: c for c, t in enumerate(ordered)}
        e_map: list[int] = []
        if n > 0:
            e_map = [levels[n - 1].index[t.restrict_to(n - 1)] for t in ordered]
        witnesses = [region.vertices[found[n][t]] for t in ordered]
        saturated = bound is not None and region.radius >= bound(n) + n
        levels.append(Level(n, ordered, e_map, witnesses, saturated, region.radius, index))
    return levels


def _settle(levels: list[Level]) -> None:
    """Unsaturate levels that leave a coarser class unrefined, and all levels above them.

    E_n restricts onto E_{n-1}, so a class at n-1 without a refinement means
    level n saw too few vertices; every finer level is missing classes too.
    """
    ok = True
    for level in levels:
        if level.n > 0:
            missing = len(levels[level.n - 1]) - len(set(level.e_map))
            if missing:
                logger.warning("Level %d leaves %d classes of level %d without a refinement",
                               level.n, missing, level.n - 1)
                level.saturated = False
        ok = ok and level.saturated
        level.saturated = ok


def classify(oracle: ActionOracle, n_max: int, explore_radius: int, budget: int = 200_000,
             repetitivity_bound: int | RepetitivityBound | None = None) -> LevelSystem:
    """Build E_0..E_{n_max} from the vertices within explore_radius of the base.

    With a repetitivity bound D, level n is typed only within D(n) of the base
    and is certified saturated once explore_radius >= D(n) + n. Without one,
    saturation is the heuristic "no new classes at twice the radius"; a budget
    failure of that second run leaves the levels unsaturated. Either way a
    level that leaves some class below it without a refinement is
    unsaturated, and so is every level above an unsaturated one.
    """
    if explore_radius < n_max:
        raise ValueError(f"explore radius {explore_radius} < n_max {n_max}")
    bound = _as_bound(repetitivity_bound)
    region = explore(oracle, explore_radius, budget)
    levels = _build(oracle, region, n_max, bound)
    logger.info("Classified %d vertices to level %d: |E_n| = %s",
                len(region), n_max, [len(level) for level in levels])

    if bound is None:
        try:
            wider = _build(oracle, explore(oracle, 2 * explore_radius, budget), n_max, None)
        except BudgetExceeded as exc:
            logger.warning("Saturation check skipped: %s", exc)
        else:
            for level, check in zip(levels, wider):
                level.saturated = set(level.classes) == set(check.classes)
                if not level.saturated:
                    logger.warning("Level %d gained %d classes at radius %d",
                                   level.n, len(check) - len(level), 2 * explore_radius)

    _settle(levels)
    return LevelSystem(oracle.content_hash(), oracle.generators, levels)
