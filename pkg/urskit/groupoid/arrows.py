"""
Arrows of the finite-precision groupoid.

An arrow at level n is (class c in E_n, target vertex index in c's ball) or
the sentinel Infinity(n). The arrow (x, gamma) has range x and target
gamma.x; storing the target instead of a word identifies all words with the
same endpoint. The source is the class of the target, known only at level
n - depth(target).

compose(first, second) follows "apply first, then second": if first goes
x -> u.x and second goes u.x -> w.u.x, the result is x -> (w u).x at level
n - depth(first.target).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from urskit.balls.levels import LevelSystem
from urskit.errors import InfinityArrow, NotComposable, PrecisionExhausted
from urskit.utils import get_logger

logger = get_logger("urskit.groupoid")


class ClassRef(NamedTuple):
    level: int
    id: int


@dataclass(frozen=True)
class ArrowClass:
    level: int
    cls: int | None = None
    target: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.cls is None

    @property
    def key(self) -> tuple[int, int]:
        if self.cls is None or self.target is None:
            raise InfinityArrow(f"infinity at level {self.level} has no class data")
        return (self.cls, self.target)

    def to_dict(self) -> dict:
        if self.is_infinity:
            return {"inf": self.level}
        return {"class": self.cls, "target": self.target}

    def __str__(self) -> str:
        if self.is_infinity:
            return f"inf_{self.level}"
        return f"({self.cls}, {self.target})@{self.level}"


def Infinity(n: int) -> ArrowClass:  # noqa: N802 - reads as the sentinel it builds
    return ArrowClass(n)


def unit(n: int, c: int) -> ArrowClass:
    return ArrowClass(n, c, 0)


def is_unit(a: ArrowClass) -> bool:
    return not a.is_infinity and a.target == 0


def depth(ls: LevelSystem, a: ArrowClass) -> int:
    if a.is_infinity:
        raise InfinityArrow("infinity has no depth")
    return ls.ball(a.level, a.cls).depth[a.target]


# ── F_n ──────────────────────────────────────────────────────────────────────

@dataclass
class FLevel:
    level: int
    arrows: list[ArrowClass]
    f_map: dict[ArrowClass, ArrowClass] | None   # level n+1 -> level n, when n+1 exists
    unit_of: list[ArrowClass]

    def __len__(self) -> int:
        return len(self.arrows)

    def to_dict(self) -> dict:
        position = {a: i for i, a in enumerate(self.arrows)}
        doc = {"level": self.level, "arrows": [a.to_dict() for a in self.arrows]}
        if self.f_map is not None:
            doc["f_map"] = [[a.to_dict(), position[b]] for a, b in self.f_map.items()]
        return doc


def arrows_with_range(ls: LevelSystem, n: int, c: int) -> list[ArrowClass]:
    return [ArrowClass(n, c, j) for j in range(len(ls.ball(n, c)))]


def build_F(ls: LevelSystem, n: int) -> FLevel:  # noqa: N802
    """All (class, ball vertex) pairs at level n plus Infinity(n)."""
    level = ls.level(n)
    arrows = [a for c in range(len(level)) for a in arrows_with_range(ls, n, c)]
    arrows.append(Infinity(n))
    f_map = None
    if n + 1 <= ls.n_max:
        upper = [a for c in range(len(ls.level(n + 1))) for a in arrows_with_range(ls, n + 1, c)]
        upper.append(Infinity(n + 1))
        f_map = {a: project_arrow(ls, a, n) for a in upper}
    return FLevel(n, arrows, f_map, [unit(n, c) for c in range(len(level))])


def project_arrow(ls: LevelSystem, a: ArrowClass, to_level: int | None = None) -> ArrowClass:
    """Image under the connecting maps, by default one level down."""
    m = a.level - 1 if to_level is None else to_level
    if m > a.level or m < 0:
        raise PrecisionExhausted(f"cannot project level {a.level} to {m}")
    if a.is_infinity:
        return Infinity(m)
    if depth(ls, a) > m:
        return Infinity(m)
    return ArrowClass(m, ls.restrict_class(a.level, a.cls, m), a.target)


# ── range, source, inverse, composition ──────────────────────────────────────

def range_of(a: ArrowClass) -> ClassRef:
    if a.is_infinity:
        raise InfinityArrow("infinity has no range")
    return ClassRef(a.level, a.cls)


def _rerooted(ls: LevelSystem, a: ArrowClass) -> tuple[ClassRef, list[int]]:
    """Class of the target's (n - d)-ball, with its index map into a's ball."""
    n, d = a.level, depth(ls, a)
    sub, order = ls.ball(n, a.cls).sub_ball(a.target, n - d)
    return ClassRef(n - d, ls.class_of(n - d, sub)), order


def source(ls: LevelSystem, a: ArrowClass) -> ClassRef:
    """Class of the target vertex at level n - depth (precision lost: depth)."""
    if a.is_infinity:
        raise InfinityArrow("infinity has no source")
    return _rerooted(ls, a)[0]


def invert_arrow(ls: LevelSystem, a: ArrowClass) -> ArrowClass:
    """(x, gamma) -> (gamma.x, gamma^-1), at level n - depth."""
    if a.is_infinity:
        raise InfinityArrow("infinity has no inverse")
    d = depth(ls, a)
    ref, order = _rerooted(ls, a)
    if d > ref.level:
        return Infinity(ref.level)
    return ArrowClass(ref.level, ref.id, order.index(0))


def divide(ls: LevelSystem, g_prime: ArrowClass, g: ArrowClass) -> ArrowClass:
    """g'^-1 g: the arrow from target(g') to target(g), for arrows with equal range."""
    if g_prime.is_infinity or g.is_infinity:
        raise InfinityArrow("cannot divide by or into infinity")
    if (g_prime.level, g_prime.cls) != (g.level, g.cls):
        raise NotComposable("divide needs arrows with the same range at the same level")
    ref, order = _rerooted(ls, g_prime)
    try:
        return ArrowClass(ref.level, ref.id, order.index(g.target))
    except ValueError:
        return Infinity(ref.level)


def composable(ls: LevelSystem, first: ArrowClass, second: ArrowClass) -> bool:
    if first.is_infinity or second.is_infinity:
        return False
    src = source(ls, first)
    m = min(src.level, second.level)
    return ls.restrict_class(src.level, src.id, m) == ls.restrict_class(second.level, second.cls, m)


def compose(ls: LevelSystem, first: ArrowClass, second: ArrowClass) -> ArrowClass:
    """Apply `first`, then `second`; result at level n - depth(first.target).

    `second` is walked from first's target along its representative word, so
    the precision budget is depth(first) + depth(second) <= level(first).
    """
    if first.is_infinity or second.is_infinity:
        raise InfinityArrow("infinity is never composable")
    n = first.level
    d_first, d_second = depth(ls, first), depth(ls, second)
    if d_first + d_second > n:
        raise PrecisionExhausted(
            f"composition needs {d_first + d_second} levels, arrow carries {n}")
    if not composable(ls, first, second):
        raise NotComposable(f"source of {first} does not match range of {second}")
    ball = ls.ball(n, first.cls)
    word = ls.ball(second.level, second.cls).representative(second.target)
    j = ball.walk(first.target, word)
    m = n - d_first
    if j is None or ball.depth[j] > m:
        return Infinity(m)
    return ArrowClass(m, ls.restrict_class(n, first.cls, m), j)


# ── metric ───────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class DyadicDistance:
    exponent: int
    exact: bool

    @property
    def value(self) -> float:
        return 2.0 ** (-self.exponent)

    def __str__(self) -> str:
        return f"{'' if self.exact else '<= '}2^-{self.exponent}"


def arrow_distance(ls: LevelSystem, a: ArrowClass, b: ArrowClass) -> DyadicDistance:
    """2^-N for the largest level N where the projections agree."""
    top = min(a.level, b.level)
    pa, pb = project_arrow(ls, a, top), project_arrow(ls, b, top)
    if pa == pb:
        return DyadicDistance(top, exact=False)
    for m in range(top - 1, -1, -1):
        if project_arrow(ls, a, m) == project_arrow(ls, b, m):
            return DyadicDistance(m, exact=True)
    return DyadicDistance(0, exact=True)
