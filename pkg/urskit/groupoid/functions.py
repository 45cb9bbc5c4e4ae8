"""
Locally constant functions on the groupoid, stored as sparse tables on F_n.

A GroupoidFunction at level n is constant on the fibers of the projection
to F_n; arrows absent from the table (and Infinity) take `infinity_value`,
which is 0 for compactly supported functions. Values can be any ring
elements with .conjugate() (ints, Fractions, Gaussian rationals, sympy).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from urskit.balls.levels import LevelSystem
from urskit.errors import PrecisionExhausted
from urskit.groupoid.arrows import ArrowClass, depth, divide, invert_arrow, project_arrow
from urskit.utils import parallel_map


@dataclass
class GroupoidFunction:
    level: int
    values: dict[tuple[int, int], Any] = field(default_factory=dict)
    infinity_value: Any = 0

    def value(self, ls: LevelSystem, a: ArrowClass) -> Any:
        if a.level < self.level:
            raise PrecisionExhausted(f"function of level {self.level} evaluated at level {a.level}")
        p = project_arrow(ls, a, self.level) if a.level > self.level else a
        if p.is_infinity:
            return self.infinity_value
        return self.values.get(p.key, 0)

    def support_depth(self, ls: LevelSystem) -> int:
        """Largest target depth carrying a nonzero value (-1 when zero)."""
        depths = [ls.ball(self.level, c).depth[j] for (c, j), v in self.values.items() if v != 0]
        return max(depths, default=-1)

    def lift(self, ls: LevelSystem, m: int) -> "GroupoidFunction":
        """The same function tabulated on the finer level m."""
        if m < self.level:
            raise PrecisionExhausted(f"cannot lift level {self.level} to {m}")
        values = {}
        for c in range(len(ls.level(m))):
            ball = ls.ball(m, c)
            for j in range(len(ball)):
                v = self.value(ls, ArrowClass(m, c, j))
                if v != 0:
                    values[(c, j)] = v
        return GroupoidFunction(m, values, self.infinity_value)

    def map(self, fn: Callable[[Any], Any]) -> "GroupoidFunction":
        return GroupoidFunction(self.level, {k: fn(v) for k, v in self.values.items()}, fn(self.infinity_value))

    def equals(self, ls: LevelSystem, other: "GroupoidFunction") -> bool:
        m = max(self.level, other.level)
        a, b = self.lift(ls, m), other.lift(ls, m)
        keys = set(a.values) | set(b.values)
        return all(a.values.get(k, 0) == b.values.get(k, 0) for k in keys) and \
            a.infinity_value == b.infinity_value


def _conj(x: Any) -> Any:
    return x.conjugate()


def convolve_functions(ls: LevelSystem, f: GroupoidFunction, g: GroupoidFunction,
                       level: int | None = None) -> GroupoidFunction:
    """(f * g)(gamma) = sum over gamma' with r(gamma') = r(gamma) of f(gamma') g(gamma'^-1 gamma).

    Tabulated at `level` P (default: f's support depth plus g's level); every
    nonzero term needs P - depth(gamma') >= level(g).
    """
    s = f.support_depth(ls)
    P = max(f.level, s + g.level) if level is None else level
    if s >= 0 and P - s < g.level:
        raise PrecisionExhausted(f"convolution at level {P} cannot resolve the second factor")

    def _row(c: int) -> dict[tuple[int, int], Any]:
        ball = ls.ball(P, c)
        weights = [(j, f.value(ls, ArrowClass(P, c, j))) for j in range(len(ball))]
        weights = [(j, w) for j, w in weights if w != 0]
        out = {}
        for y in range(len(ball)):
            total: Any = 0
            for z, w in weights:
                h = divide(ls, ArrowClass(P, c, z), ArrowClass(P, c, y))
                gv = g.infinity_value if h.is_infinity else g.value(ls, h)
                if gv != 0:
                    total = total + w * gv
            if total != 0:
                out[(c, y)] = total
        return out

    values: dict[tuple[int, int], Any] = {}
    for row in parallel_map(_row, range(len(ls.level(P)))):
        values.update(row)
    return GroupoidFunction(P, values)


def adjoint_function(ls: LevelSystem, f: GroupoidFunction, level: int | None = None) -> GroupoidFunction:
    """f*(gamma) = conj f(gamma^-1), tabulated at `level` (default 2 * level(f))."""
    P = 2 * f.level if level is None else level
    s = f.support_depth(ls)
    values = {}
    for c in range(len(ls.level(P))):
        ball = ls.ball(P, c)
        for j in range(len(ball)):
            a = ArrowClass(P, c, j)
            d = depth(ls, a)
            if d > s:
                continue
            inv = invert_arrow(ls, a)
            v = f.infinity_value if inv.is_infinity else f.value(ls, inv)
            if v != 0:
                values[(c, j)] = _conj(v)
    return GroupoidFunction(P, values, _conj(f.infinity_value))
