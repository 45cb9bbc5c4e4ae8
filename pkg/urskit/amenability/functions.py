"""
Amenability data on the groupoid and the bridges to property A witnesses.

Forward: a witness rho becomes f(x, gamma) = rho_x(gamma.x), which must have
unit fiber norms and f * f^* close to one on short arrows. Backward: a
function is flattened to a coarser level, which costs a uniform error eps,
and read back as a witness, normalized per class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import sympy

from urskit.amenability.witness import (
    PropAWitness,
    as_float,
    check_witness,
    inner,
    neighbor_pairs,
    norm2,
    normalization_check,
    normalized,
)
from urskit.balls.levels import LevelSystem
from urskit.groupoid.functions import GroupoidFunction
from urskit.reports import CheckReport, Outcome, combine
from urskit.utils import fraction_str, get_logger

logger = get_logger("urskit.propa")


@dataclass
class AmenabilityFunction:
    n: int
    locality: int                       # S_n, the level f is tabulated at
    function: GroupoidFunction
    vanishing_radius: int | None = None
    epsilon: Fraction | float | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "S": self.locality,
            "T": self.vanishing_radius,
            "epsilon": None if self.epsilon is None else str(self.epsilon),
            "values": [
                {"class": c, "target": j, "value": str(v)}
                for (c, j), v in sorted(self.function.values.items())
            ],
        }


def witness_to_functions(ls: LevelSystem, w: PropAWitness) -> AmenabilityFunction:
    """f_n(x, gamma) = rho_x(gamma.x); the class-keyed tables coincide."""
    f = GroupoidFunction(w.radius, {k: v for k, v in w.values.items() if v != 0}, 0)
    return AmenabilityFunction(w.n, w.radius, f, f.support_depth(ls))


def functions_to_witness(ls: LevelSystem, fn: AmenabilityFunction | GroupoidFunction, n: int | None = None,
                         normalize: bool = False) -> PropAWitness:
    """rho_x(gamma.x) = f(class of x, gamma), optionally normalized per class."""
    if isinstance(fn, AmenabilityFunction):
        n = fn.n if n is None else n
        f = fn.function
    else:
        f = fn
    if n is None:
        raise ValueError("index n is required for a bare groupoid function")
    w = PropAWitness(n, f.level, ls.oracle_hash, {k: sympy.sympify(v) for k, v in f.values.items() if v != 0})
    return normalized(ls, w) if normalize else w


def _fiber_norms(ls: LevelSystem, f: GroupoidFunction) -> list[Any]:
    out = []
    for c, t in enumerate(ls.level(f.level).classes):
        out.append(norm2({j: f.values[(c, j)] for j in range(len(t)) if (c, j) in f.values}))
    return out


def amenability_check(ls: LevelSystem, fn: AmenabilityFunction, L: int | None = None,
                      tol: float = 1e-12) -> CheckReport:
    """Fiber norms and |1 - (f * f^*)(x, gamma)| on arrows of depth <= max(L, n).

    (f * f^*)(x, gamma) is the inner product <rho_x, rho_{gamma.x}>, read off
    level S + max(L, n). PASS needs unit fiber norms and deviations <= 1/n on
    arrows of depth <= n; deeper arrows up to L are reported only.
    """
    n = fn.n
    L = n if L is None else L
    reach = max(L, n)
    w = functions_to_witness(ls, fn)

    norms = [as_float(v) for v in _fiber_norms(ls, fn.function)]
    norm_dev = max((abs(v - 1.0) for v in norms), default=1.0)

    by_depth: dict[int, float] = {}
    for _, _, d, rho_r, rho_y in neighbor_pairs(ls, w, reach):
        dev = as_float(1 - inner(rho_r, rho_y))
        by_depth[d] = max(by_depth.get(d, 0.0), dev)
    compact = max((v for d, v in by_depth.items() if d <= n), default=0.0)

    passed = norm_dev <= tol and compact <= 1.0 / n + tol
    outcome = Outcome.of(passed)
    if passed and not ls.saturated_to(fn.locality + reach):
        outcome = Outcome.UNDECIDED
    logger.info("Amenability n=%d: fiber norm deviation %.3g, max |1 - f*f^*| on depth <= %d is %.6g (%s)",
                n, norm_dev, n, compact, outcome.value)
    return CheckReport(
        "amenability",
        outcome,
        {
            "n": n,
            "S": fn.locality,
            "L": L,
            "fiber_norm_deviation": norm_dev,
            "max_deviation_by_depth": {str(d): v for d, v in sorted(by_depth.items())},
            "max_deviation_compact": compact,
            "bound": 1.0 / n,
        },
    )


# ── the converse: flattening and eps schedules ───────────────────────────────

def flatten(ls: LevelSystem, f: GroupoidFunction, N: int) -> tuple[GroupoidFunction, Any]:
    """Push f down to level N, reading each fiber at its smallest-id refinement.

    The representative of a class c at level N is the level-M refinement of c
    with the smallest class id, i.e. the first in serialized-BallType order.
    It is not chosen by shortlex-least witness word.

    Returns (f', eps) with eps the sup of |f - f' o projection| over F_M,
    which includes |f| on arrows of depth > N (they project to infinity,
    where f' is 0).
    """
    M = f.level
    if N > M:
        raise ValueError(f"cannot flatten level {M} to finer level {N}")
    values = {}
    for c in range(len(ls.level(N))):
        refined = ls.refinements(N, c, M)
        if not refined:
            continue
        d0 = min(refined)
        for j in range(len(ls.ball(N, c))):
            v = f.values.get((d0, j), 0)
            if v != 0:
                values[(c, j)] = v
    flat = GroupoidFunction(N, values, 0)

    eps: Any = 0
    for d, t in enumerate(ls.level(M).classes):
        c = ls.restrict_class(M, d, N)
        for j in range(len(t)):
            here = f.values.get((d, j), 0)
            there = values.get((c, j), 0) if t.depth[j] <= N else 0
            gap = abs(here - there)
            if gap > eps:
                eps = gap
    return flat, eps


def epsilon_schedule_check(n: int, T: int, sup_f: Fraction | float | int, eps: Fraction | float | int,
                           q_size: int) -> bool:
    """Both smallness conditions on eps, evaluated in exact rationals."""
    s, e = Fraction(sup_f), Fraction(eps)
    scale = Fraction(q_size + 1) ** T
    first = scale * (2 * s + e) * e
    second = (4 * e * e + 8 * e * s) * scale
    return Fraction(1, n) >= first and Fraction(1, n) >= second


def derive_epsilon_schedule(n: int, T: int, sup_f: Fraction | float | int, q_size: int) -> Fraction:
    """A rational eps meeting both conditions of epsilon_schedule_check."""
    bound = max(1, math.ceil(sup_f))
    return Fraction(1, 16 * n * (q_size + 1) ** T * bound)


def _to_fraction(x: Any) -> Fraction:
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    s = sympy.sympify(x)
    if s.is_Rational:
        return Fraction(int(s.p), int(s.q))
    return Fraction(as_float(s)).limit_denominator(10**12)


def _sup(f: GroupoidFunction) -> float:
    return max((as_float(v) for v in f.values.values()), default=0.0)


# ── bridges ──────────────────────────────────────────────────────────────────

def forward_bridge(ls: LevelSystem, w: PropAWitness, L: int | None = None, tol: float = 1e-12) -> CheckReport:
    """witness -> functions -> amenability check, plus the roundtrip."""
    witness_report = check_witness(ls, w, tol=tol)
    fn = witness_to_functions(ls, w)
    amen = amenability_check(ls, fn, L, tol)
    back = functions_to_witness(ls, fn)
    roundtrip = back.values == {k: v for k, v in w.values.items() if v != 0}
    outcome = combine([witness_report.outcome, amen.outcome, Outcome.of(roundtrip)])
    return CheckReport("propa-forward", outcome, {
        "witness": witness_report.to_dict(),
        "amenability": amen.to_dict(),
        "roundtrip": roundtrip,
    })


def backward_bridge(ls: LevelSystem, fn: AmenabilityFunction, N: int | None = None,
                    tol: float = 1e-12) -> CheckReport:
    """functions -> flatten -> eps schedule -> normalized witness -> witness check."""
    f = fn.function
    N = f.level if N is None else N
    flat, eps = flatten(ls, f, N)
    T = max(f.support_depth(ls), flat.support_depth(ls), 0)
    sup_f = _sup(f)
    q = ls.generators.size
    eps_exact = _to_fraction(eps)
    schedule_ok = epsilon_schedule_check(fn.n, T, sup_f, eps_exact, q)
    suggested = derive_epsilon_schedule(fn.n, T, sup_f, q)
    flat_fn = AmenabilityFunction(fn.n, N, flat, T, eps_exact)

    raw = functions_to_witness(ls, flat_fn)
    unit = normalized(ls, raw)
    witness_report = check_witness(ls, unit, tol=tol)
    norm_report = normalization_check(ls, raw, tol)
    outcome = combine([witness_report.outcome, norm_report.outcome])
    if not schedule_ok:
        logger.warning("Flattening error %s exceeds the eps schedule (suggested %s)",
                       eps_exact, fraction_str(suggested))
    return CheckReport("propa-backward", outcome, {
        "flatten_level": N,
        "epsilon": fraction_str(eps_exact),
        "T": T,
        "sup_f": sup_f,
        "schedule_ok": schedule_ok,
        "suggested_epsilon": fraction_str(suggested),
        "witness": witness_report.to_dict(),
        "normalization": norm_report.to_dict(),
    })
