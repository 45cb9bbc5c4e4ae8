"""
Local property A witnesses.

A witness of index n assigns to every vertex x a unit vector rho_x supported
in B_R(x) that depends only on the R-ball type of x. It is stored per class
at level R. check_witness works on level R + n, where every pair of vertices
at distance <= n appears inside one class ball, so a pass certifies the
1/n bound for every such pair of the infinite graph.

Values are sympy numbers so norms of indicator witnesses are exact.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterator

import sympy

from urskit.balls.levels import LevelSystem
from urskit.errors import ConfigError, ZeroNormFiber
from urskit.reports import CheckReport, Outcome
from urskit.utils import get_logger

logger = get_logger("urskit.propa")

Vector = dict[int, Any]


@dataclass
class PropAWitness:
    n: int
    radius: int
    level_hash: str
    values: dict[tuple[int, int], Any] = field(default_factory=dict)

    def vector(self, c: int, size: int) -> Vector:
        """rho of class c, indexed by ball position."""
        return {j: self.values[(c, j)] for j in range(size) if self.values.get((c, j), 0) != 0}

    def to_dict(self) -> dict:
        return {
            "level_system": self.level_hash,
            "n": self.n,
            "R": self.radius,
            "values": [
                {"class": c, "vertex": j, "value": str(v)}
                for (c, j), v in sorted(self.values.items())
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "PropAWitness":
        try:
            values = {
                (int(e["class"]), int(e["vertex"])): sympy.sympify(e["value"])
                for e in doc["values"]
            }
            return cls(int(doc["n"]), int(doc["R"]), str(doc["level_system"]), values)
        except (KeyError, TypeError, ValueError, sympy.SympifyError) as exc:
            raise ConfigError(f"malformed witness document: {exc}") from exc


def abs2(x: Any) -> Any:
    return sympy.expand(x * sympy.conjugate(x))


def norm2(v: Vector) -> Any:
    counts = Counter(v.values())
    return sympy.Add(*(k * abs2(a) for a, k in counts.items()))


def distance2(u: Vector, v: Vector) -> Any:
    """||u - v||^2, grouping equal coordinate pairs."""
    counts = Counter((u.get(i, 0), v.get(i, 0)) for i in set(u) | set(v))
    return sympy.Add(*(k * abs2(sympy.sympify(a) - b) for (a, b), k in counts.items()))


def inner(u: Vector, v: Vector) -> Any:
    counts = Counter((u[i], v[i]) for i in set(u) & set(v))
    return sympy.Add(*(k * sympy.sympify(a) * sympy.conjugate(b) for (a, b), k in counts.items()))


def as_float(x: Any) -> float:
    return float(sympy.Abs(sympy.N(x, 30)))


def neighbor_pairs(ls: LevelSystem, w: PropAWitness, reach: int) -> Iterator[tuple[int, int, int, Vector, Vector]]:
    """(class, y, depth, rho_root, rho_y) at level R + reach, both in class-ball coordinates."""
    R = w.radius
    P = R + reach
    for c, t in enumerate(ls.level(P).classes):
        root = w.vector(ls.restrict_class(P, c, R), t.size_at(R))
        for y in range(t.size_at(reach)):
            sub, order = t.sub_ball(y, R)
            cy = ls.class_of(R, sub)
            rho_y = {order[j]: v for j, v in w.vector(cy, len(sub)).items()}
            yield c, y, t.depth[y], root, rho_y


def check_witness(ls: LevelSystem, w: PropAWitness, n: int | None = None, tol: float = 1e-12) -> CheckReport:
    """Unit norms per class and ||rho_x - rho_y|| <= 1/n for d(x, y) <= n."""
    n = w.n if n is None else n
    R = w.radius
    bound = 1.0 / n
    failures: list[dict] = []

    norm_dev = 0.0
    for c, t in enumerate(ls.level(R).classes):
        dev = abs(float(sympy.sqrt(norm2(w.vector(c, len(t))))) - 1.0)
        norm_dev = max(norm_dev, dev)
        if dev > tol:
            failures.append({"class": c, "norm_deviation": dev})

    max_dist = 0.0
    cs_violations = 0
    pairs = 0
    for c, y, d, rho_r, rho_y in neighbor_pairs(ls, w, n):
        pairs += 1
        dist = float(sympy.sqrt(distance2(rho_r, rho_y)))
        max_dist = max(max_dist, dist)
        if dist > bound + tol:
            failures.append({"class": c, "y": y, "depth": d, "distance": dist})
        # Cauchy-Schwarz step: |1 - <u, v>| <= ||u - v|| ||v|| + |1 - ||v||^2|
        nv2 = as_float(norm2(rho_y))
        lhs = as_float(1 - inner(rho_r, rho_y))
        if lhs > dist * nv2 ** 0.5 + abs(1 - nv2) + 1e-12:
            cs_violations += 1

    P = R + n
    if failures or cs_violations:
        outcome = Outcome.FAIL
    elif not ls.saturated_to(P):
        logger.warning("Witness passes on levels not saturated to %d", P)
        outcome = Outcome.UNDECIDED
    else:
        outcome = Outcome.PASS
    logger.info("Witness n=%d R=%d: max ||rho_x - rho_y|| = %.6g vs 1/n = %.6g (%s)",
                n, R, max_dist, bound, outcome.value)
    return CheckReport(
        "propa-witness",
        outcome,
        {"n": n, "R": R, "level": P, "pairs": pairs, "bound": bound, "max_distance": max_dist,
         "max_norm_deviation": norm_dev, "inner_product_violations": cs_violations},
        failures,
    )


def ball_indicator_witness(ls: LevelSystem, n: int, k: int) -> PropAWitness:
    """rho_x = |B_k(x)|^-1/2 times the indicator of B_k(x)."""
    values = {}
    for c, t in enumerate(ls.level(k).classes):
        v = 1 / sympy.sqrt(len(t))
        for j in range(len(t)):
            values[(c, j)] = v
    return PropAWitness(n, k, ls.oracle_hash, values)


def normalized(ls: LevelSystem, w: PropAWitness) -> PropAWitness:
    """Divide each class vector by its norm."""
    values = {}
    for c, t in enumerate(ls.level(w.radius).classes):
        vec = w.vector(c, len(t))
        norm = sympy.sqrt(norm2(vec))
        if norm == 0:
            raise ZeroNormFiber(f"class {c} at level {w.radius} has a zero vector")
        for j, v in vec.items():
            values[(c, j)] = v / norm
    return PropAWitness(w.n, w.radius, w.level_hash, values)


def normalization_check(ls: LevelSystem, w: PropAWitness, tol: float = 1e-12) -> CheckReport:
    """||r^_a - r^_b|| <= (||r_a - r_b|| + | ||r_a|| - ||r_b|| |) / ||r_a|| on neighbor pairs."""
    unit = normalized(ls, w)
    bad = []
    pairs = 0
    for (c, y, d, ra, rb), (_, _, _, ua, ub) in zip(neighbor_pairs(ls, w, w.n), neighbor_pairs(ls, unit, w.n)):
        pairs += 1
        na, nb = as_float(sympy.sqrt(norm2(ra))), as_float(sympy.sqrt(norm2(rb)))
        lhs = as_float(sympy.sqrt(distance2(ua, ub)))
        rhs = (as_float(sympy.sqrt(distance2(ra, rb))) + abs(na - nb)) / na
        if lhs > rhs + tol:
            bad.append({"class": c, "y": y, "lhs": lhs, "rhs": rhs})
    return CheckReport("propa-normalization", Outcome.of(not bad), {"pairs": pairs}, bad)
