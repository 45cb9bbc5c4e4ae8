"""
Finite-scale checkers over level systems: repetitivity, isotropy evidence
and base independence.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from urskit.actions.oracles import ActionOracle
from urskit.actions.region import explore
from urskit.actions.words import Word, format_word, word_enumerate
from urskit.balls.ball_type import BallType
from urskit.balls.levels import LevelSystem, classify, type_region
from urskit.errors import BudgetExceeded, Unsaturated
from urskit.reports import CheckReport, Outcome
from urskit.utils import get_logger

logger = get_logger("urskit.checks")


# ── repetitivity ─────────────────────────────────────────────────────────────

Bounds = list[int | None]


@dataclass
class RepetitivityReport:
    level: int
    bounds: Bounds                           # D(m) for m = 0..level, None when some class was not found
    class_bounds: dict[int, int | None]      # D(c) for classes at `level`
    outcome: Outcome
    explore_radius: int
    center_radius: int
    centers: int
    max_distance: int
    doubled_bounds: Bounds | None = None     # D(m) measured again at twice the radius
    failures: list[dict] = field(default_factory=list)
    undecided: list[dict] = field(default_factory=list)

    @property
    def bound(self) -> int | None:
        return self.bounds[-1] if self.bounds else 0

    @property
    def stable(self) -> bool:
        return self.doubled_bounds is not None and self.doubled_bounds == self.bounds

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "outcome": self.outcome.value,
            "D": self.bounds,
            "D_doubled": self.doubled_bounds,
            "stable": self.stable,
            "class_bounds": {str(c): d for c, d in sorted(self.class_bounds.items())},
            "sampling": {
                "explore_radius": self.explore_radius,
                "center_radius": self.center_radius,
                "centers": self.centers,
                "max_distance": self.max_distance,
            },
            "failures": self.failures[:50],
            "undecided": self.undecided[:50],
        }


@dataclass
class _Windows:
    radius: int
    center_radius: int
    max_distance: int
    centers: int
    bounds: Bounds
    class_bounds: dict[int, int | None]
    unknown: int
    failures: list[dict]
    undecided: list[dict]


def _monotone(raw: Bounds) -> Bounds:
    """Running maximum, where None (unbounded) absorbs every later level."""
    out: Bounds = []
    for d in raw:
        below = out[-1] if out else 0
        out.append(None if d is None or below is None else max(d, below))
    return out


def _measure(ls: LevelSystem, oracle: ActionOracle, n: int, R: int, center_radius: int | None,
             max_distance: int | None, budget: int) -> _Windows:
    cr = max(0, (R - n) // 2) if center_radius is None else center_radius
    md = max(0, R - n - cr) if max_distance is None else max_distance

    region = explore(oracle, R, budget)
    labels: list[list[int | None]] = []
    unknown = 0
    for chain in type_region(region, n):
        row = []
        for m, t in enumerate(chain):
            c = ls.level(m).index.get(t)
            if c is None:
                unknown += 1
            row.append(c)
        labels.append(row)

    nearest: list[dict[int, int | None]] = [dict() for _ in range(n + 1)]
    failures: list[dict] = []
    undecided: list[dict] = []
    centers = region.within(cr)
    for v in centers:
        dv = region.dist[v]
        windows = [R - m - dv for m in range(n + 1)]
        found: list[dict[int, int]] = [dict() for _ in range(n + 1)]
        for u, delta in region.bfs_from(v, max(windows[0], 0)).items():
            for m in range(min(n + 1, len(labels[u]))):
                c = labels[u][m]
                if c is None or delta > windows[m]:
                    continue
                if c not in found[m] or delta < found[m][c]:
                    found[m][c] = delta
        for m in range(n + 1):
            for c in range(len(ls.level(m))):
                delta = found[m].get(c)
                if delta is not None:
                    if nearest[m].get(c, 0) is not None:
                        nearest[m][c] = max(nearest[m].get(c, 0), delta)
                    continue
                nearest[m][c] = None
                entry = {"level": m, "class": c, "center": oracle.serialize(region.vertices[v]),
                         "window": windows[m], "radius": R}
                (failures if windows[m] >= md else undecided).append(entry)

    raw: Bounds = []
    for m in range(n + 1):
        values = [nearest[m].get(c, 0) for c in range(len(ls.level(m)))]
        raw.append(None if None in values else max(values, default=0))
    return _Windows(R, cr, md, len(centers), _monotone(raw), dict(nearest[n]), unknown, failures, undecided)


def urs_repetitivity(ls: LevelSystem, oracle: ActionOracle, n: int,
                     center_radius: int | None = None, max_distance: int | None = None,
                     budget: int = 200_000) -> RepetitivityReport:
    """Distance from sampled centers to the nearest realization of every class.

    Centers are the vertices within center_radius of the base (by default
    half of what the level-n windows leave). Around a center v the level-m
    window has radius R - m - d(v), which keeps every vertex of the window
    typed at level m. A class missing from a window of radius at least
    max_distance is a failure; a class missing from a smaller window leaves
    the report undecided. Either way D is unbounded (None) from that level up.

    D(0) <= D(1) <= ... is reported as a running maximum. The measurement is
    repeated at twice the explore radius, with a default center radius scaled
    along; PASS needs both runs to give the same D.
    """
    R = ls.level(n).explore_radius
    saturated = ls.saturated_to(n)
    if not saturated:
        logger.warning("Levels up to %d are not saturated, repetitivity is undecided", n)

    first = _measure(ls, oracle, n, R, center_radius, max_distance, budget)
    failures, undecided, unknown = list(first.failures), list(first.undecided), first.unknown
    doubled: Bounds | None = None
    try:
        wide = _measure(ls, oracle, n, 2 * R, center_radius, max_distance, budget)
    except BudgetExceeded as exc:
        logger.warning("Doubling check skipped: %s", exc)
    else:
        doubled = wide.bounds
        failures += wide.failures
        undecided += wide.undecided
        unknown += wide.unknown
        if doubled != first.bounds:
            logger.warning("D changed from %s to %s when the radius doubled to %d", first.bounds, doubled, 2 * R)

    stable = doubled is not None and doubled == first.bounds
    if failures:
        outcome = Outcome.FAIL
    elif undecided or unknown or not saturated or not stable or None in first.bounds:
        outcome = Outcome.UNDECIDED
    else:
        outcome = Outcome.PASS
    logger.info("Repetitivity to level %d: D = %s (%s)", n, first.bounds, outcome.value)
    return RepetitivityReport(n, first.bounds, first.class_bounds, outcome, R, first.center_radius,
                              first.centers, first.max_distance, doubled, failures, undecided)


# ── isotropy evidence ────────────────────────────────────────────────────────

@dataclass(frozen=True)
class IsotropyCandidate:
    level: int
    class_chain: tuple[int, ...]             # class ids at levels 0..level
    word: Word
    target: int

    def to_dict(self, ls: LevelSystem) -> dict:
        return {
            "level": self.level,
            "class_chain": list(self.class_chain),
            "word": format_word(ls.generators, self.word),
            "target": self.target,
        }


def isotropy_scan(ls: LevelSystem, max_len: int, n_max: int | None = None) -> list[IsotropyCandidate]:
    """Words that move a witness while its (N - l)-ball type is kept.

    For a class c at level N with ball t, gamma is a candidate when
    gamma.root != root and the (N - l(gamma))-balls around the root and around
    gamma.root coincide; equality at radius N - l implies it at every smaller
    level, so the condition persists for all levels up to N. One candidate is
    kept per (class, target), labeled by its shortlex-least word. Absence of
    candidates proves nothing. Levels up to N must be saturated.
    """
    N = ls.n_max if n_max is None else n_max
    ls.require_saturated(N)
    top = ls.level(N)
    words = [w for w in word_enumerate(ls.generators, min(max_len, N)) if w]
    candidates: list[IsotropyCandidate] = []
    for c, t in enumerate(top.classes):
        chain = tuple(ls.restrict_class(N, c, m) for m in range(N + 1))
        seen: set[int] = set()
        own: dict[int, BallType] = {}
        for w in words:
            j = t.locate(w)
            if j is None or j == 0 or j in seen:
                continue
            r = N - len(w)
            if r not in own:
                own[r] = t.sub_type(0, r)
            if t.sub_type(j, r) == own[r]:
                seen.add(j)
                candidates.append(IsotropyCandidate(N, chain, w, j))
    logger.info("Isotropy scan at level %d, words <= %d: %d candidates", N, max_len, len(candidates))
    return candidates


# ── base independence ────────────────────────────────────────────────────────

def base_independence_check(oracle_a: ActionOracle, oracle_b: ActionOracle, n: int, R: int,
                            budget: int = 200_000) -> CheckReport:
    """Compare the E_n sets seen from two base vertices."""
    if oracle_a.generators != oracle_b.generators:
        raise ValueError("oracles must share a generator system")
    ls_a = classify(oracle_a, n, R, budget)
    ls_b = classify(oracle_b, n, R, budget)
    for name, ls in (("a", ls_a), ("b", ls_b)):
        if not ls.saturated_to(n):
            raise Unsaturated(f"exploration from base {name} not saturated at level {n}")
    types_a = {t.serialize() for t in ls_a.level(n).classes}
    types_b = {t.serialize() for t in ls_b.level(n).classes}
    only_a = sorted(types_a - types_b)
    only_b = sorted(types_b - types_a)
    equal = not only_a and not only_b
    return CheckReport(
        "base-independence",
        Outcome.of(equal),
        {"level": n, "classes": len(types_a), "equal": equal, "only_a": only_a, "only_b": only_b},
        [{"side": "a", "type": t} for t in only_a] + [{"side": "b", "type": t} for t in only_b],
    )
