"""
The quotient map from the transformation groupoid onto the arrow groupoid.

A TransformationArrow (c, word) at level n keeps the word, so two words that
move the root to the same vertex are different transformation arrows with the
same image. quotient_checks verifies at finite scale that q is a surjective,
open homomorphism whose preimages of basic sets are unions of basic sets.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from urskit.actions.words import Word, format_word, reduce_word, word_enumerate
from urskit.balls.levels import LevelSystem
from urskit.errors import PrecisionExhausted
from urskit.groupoid.arrows import ArrowClass, Infinity, compose, is_unit, project_arrow, source
from urskit.reports import CheckReport, Outcome
from urskit.utils import get_logger

logger = get_logger("urskit.quotient")


@dataclass(frozen=True)
class TransformationArrow:
    level: int
    cls: int
    word: Word

    def to_dict(self, ls: LevelSystem) -> dict:
        return {"level": self.level, "class": self.cls, "word": format_word(ls.generators, self.word)}


def q_map(ls: LevelSystem, t: TransformationArrow) -> ArrowClass:
    """(c, gamma) -> (c, gamma.root); words longer than the level go to Infinity."""
    if len(t.word) > t.level:
        logger.warning("Word of length %d exceeds level %d, mapped to infinity", len(t.word), t.level)
        return Infinity(t.level)
    j = ls.ball(t.level, t.cls).locate(t.word)
    if j is None:
        return Infinity(t.level)
    return ArrowClass(t.level, t.cls, j)


def transformation_product(first: TransformationArrow, second: TransformationArrow) -> TransformationArrow:
    """Apply `first`, then `second`: (x, u) then (u.x, w) gives (x, w u).

    No class check is made; `second.cls` is expected to be the class of u.x.
    """
    return TransformationArrow(first.level, first.cls, second.word + first.word)


# ------------------------------------------------------------------
# finite-scale checks
# ------------------------------------------------------------------

def _homomorphism(ls: LevelSystem, N: int, words: list[Word]) -> tuple[list[dict], int, int]:
    failures: list[dict] = []
    checked = skipped = 0
    for c in range(len(ls.level(N))):
        for u in words:
            first = TransformationArrow(N, c, u)
            qa = q_map(ls, first)
            if qa.is_infinity:
                continue
            src = source(ls, qa)
            for w in words:
                if len(u) + len(w) > N:
                    skipped += 1
                    continue
                second = TransformationArrow(src.level, src.id, w)
                qb = q_map(ls, second)
                if qb.is_infinity:
                    skipped += 1
                    continue
                lhs = project_arrow(ls, q_map(ls, transformation_product(first, second)), src.level)
                rhs = compose(ls, qa, qb)
                checked += 1
                if lhs != rhs:
                    failures.append({"class": c, "first": format_word(ls.generators, u),
                                     "second": format_word(ls.generators, w),
                                     "product": str(lhs), "composed": str(rhs)})
    return failures, checked, skipped


def _surjectivity(ls: LevelSystem, N: int, L: int, words: list[Word]) -> list[dict]:
    missing = []
    reach = min(L, N)
    for c in range(len(ls.level(N))):
        ball = ls.ball(N, c)
        hit = {q_map(ls, TransformationArrow(N, c, w)).target for w in words}
        for j in range(len(ball)):
            if ball.depth[j] <= reach and j not in hit:
                missing.append({"class": c, "target": j})
    return missing


def _openness(ls: LevelSystem, N: int, P: int, words: list[Word]) -> list[dict]:
    """Image of each V_{c,N,gamma} is saturated for the level-M data, M = max(N, l(gamma))."""
    failures = []
    for c in range(len(ls.level(N))):
        above = ls.refinements(N, c, P)
        for w in words:
            M = max(N, len(w))
            image = {(d, ls.ball(P, d).locate(w)) for d in above}
            projected = {(ls.restrict_class(P, d, M), j) for d, j in image}
            closure = {(d, j) for e, j in projected for d in ls.refinements(M, e, P)}
            if closure != image:
                failures.append({"class": c, "word": format_word(ls.generators, w),
                                 "extra": sorted(closure - image)[:5]})
    return failures


def _preimage(ls: LevelSystem, N: int, P: int, words: list[Word]) -> list[dict]:
    """Membership in q^-1(U_{c,N,eta}) depends only on the level-max(N, l(word)) class."""
    failures = []
    for c in range(len(ls.level(N))):
        ball = ls.ball(N, c)
        for j in range(len(ball)):
            for w in words:
                M = max(N, len(w))
                members: dict[int, set[bool]] = defaultdict(set)
                for d in range(len(ls.level(P))):
                    inside = ls.restrict_class(P, d, N) == c and ls.ball(P, d).locate(w) == j
                    members[ls.restrict_class(P, d, M)].add(inside)
                split = [e for e, seen in members.items() if len(seen) > 1]
                if split:
                    failures.append({"class": c, "target": j,
                                     "word": format_word(ls.generators, w), "split_classes": split})
    return failures


def _collapses(ls: LevelSystem, N: int, words: list[Word]) -> tuple[list[dict], bool]:
    """Nonempty reduced words acting as units, and whether q separates reduced words."""
    collapses = []
    injective = True
    for c in range(len(ls.level(N))):
        fibers: dict[int, list[Word]] = defaultdict(list)
        for w in words:
            if reduce_word(ls.generators, w) != w:
                continue
            a = q_map(ls, TransformationArrow(N, c, w))
            fibers[a.target].append(w)
            if w and is_unit(a):
                collapses.append({"class": c, "word": format_word(ls.generators, w)})
        if any(len(ws) > 1 for ws in fibers.values()):
            injective = False
    return collapses, injective


def quotient_checks(ls: LevelSystem, N: int, L: int) -> CheckReport:
    """Homomorphism, surjectivity, openness and preimage checks of q at level N.

    Words run over all words of length <= L (unreduced). Openness and preimage
    are decided on level P = max(N, L) data.
    """
    P = max(N, L)
    if P > ls.n_max:
        raise PrecisionExhausted(f"quotient checks need level {P}, level system stops at {ls.n_max}")
    words = word_enumerate(ls.generators, L)
    hom_failures, checked, skipped = _homomorphism(ls, N, words)
    missing = _surjectivity(ls, N, L, [w for w in words if len(w) <= N])
    open_failures = _openness(ls, N, P, words)
    pre_failures = _preimage(ls, N, P, words)
    collapses, injective = _collapses(ls, N, [w for w in words if len(w) <= N])

    checks = {
        "homomorphism": not hom_failures,
        "surjectivity": not missing,
        "openness": not open_failures,
        "preimage": not pre_failures,
    }
    outcome = Outcome.of(all(checks.values()))
    if not ls.saturated_to(P) and outcome is Outcome.PASS:
        logger.warning("Quotient checks passed on unsaturated levels up to %d", P)
        outcome = Outcome.UNDECIDED
    logger.info("Quotient checks at N=%d, L=%d: %s (%d pairs, %d skipped)",
                N, L, outcome.value, checked, skipped)
    details = {
        "level": N,
        "word_length": L,
        "checks": checks,
        "pairs_checked": checked,
        "pairs_skipped": skipped,
        "injective_on_reduced_words": injective,
        "collapses": collapses[:50],
    }
    witnesses = (
        [dict(check="homomorphism", **f) for f in hom_failures]
        + [dict(check="surjectivity", **f) for f in missing]
        + [dict(check="openness", **f) for f in open_failures]
        + [dict(check="preimage", **f) for f in pre_failures]
    )
    return CheckReport("quotient", outcome, details, witnesses)
