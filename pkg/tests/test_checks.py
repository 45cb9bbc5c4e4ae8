import pytest

from urskit.balls import base_independence_check, classify, isotropy_scan, urs_repetitivity
from urskit.errors import Unsaturated
from urskit.reports import CheckReport, Outcome, combine


@pytest.mark.parametrize("name, oracle", [("ls_int", "integers"), ("ls_cycle", "two_cycle")])
def test_repetitivity_is_zero_for_homogeneous_graphs(request, name, oracle):
    ls = request.getfixturevalue(name)
    rep = urs_repetitivity(ls, request.getfixturevalue(oracle), 3)
    assert rep.outcome is Outcome.PASS
    assert rep.bounds == [0, 0, 0, 0]
    assert rep.doubled_bounds == [0, 0, 0, 0]
    assert rep.stable
    doc = rep.to_dict()
    assert doc["D"] == [0, 0, 0, 0]
    assert doc["stable"] is True


def test_grigorchuk_repetitivity_near_the_base(ls_grig, grigorchuk):
    rep = urs_repetitivity(ls_grig, grigorchuk, 1, center_radius=2)
    # from 1^inf: first b-loop 7 steps out, first root with d-loops on both sides 14
    assert rep.centers == 3
    assert rep.bounds == [7, 14]
    assert rep.doubled_bounds == [7, 14]
    assert rep.stable
    assert rep.outcome is Outcome.PASS
    assert max(rep.class_bounds.values()) == 14


def test_grigorchuk_repetitivity_grows_with_the_window(ls_grig, grigorchuk):
    # the root class of 1^inf occurs only at the base, so D follows the farthest center
    rep = urs_repetitivity(ls_grig, grigorchuk, 1)
    assert rep.center_radius == 47
    assert rep.bounds == [47, 47]
    assert rep.doubled_bounds == [95, 95]
    assert not rep.stable
    assert rep.outcome is Outcome.UNDECIDED
    assert not rep.failures


def test_repetitivity_bounds_are_monotone(ls_grig, grigorchuk):
    rep = urs_repetitivity(ls_grig, grigorchuk, 4, center_radius=3)
    assert None not in rep.bounds
    assert rep.bounds == sorted(rep.bounds)
    assert rep.bounds[:2] == [7, 14]


def test_missing_class_is_unbounded(ls_grig, grigorchuk):
    # centers 60 steps out cannot see the base inside their windows
    rep = urs_repetitivity(ls_grig, grigorchuk, 1, center_radius=60)
    assert rep.bounds == [None, None]
    assert rep.to_dict()["D"] == [None, None]
    assert rep.outcome is Outcome.FAIL
    assert any(f["level"] == 0 and f["window"] == 36 for f in rep.failures)


def test_repetitivity_on_unsaturated_levels(ls_grig_small, grigorchuk):
    rep = urs_repetitivity(ls_grig_small, grigorchuk, 2, center_radius=2)
    # at twice the radius the d-loop pair shows up as a type the levels do not know
    assert rep.outcome is Outcome.UNDECIDED
    assert not rep.failures


@pytest.mark.parametrize("name", ["ls_int", "ls_cycle"])
def test_isotropy_candidates_persist(request, name):
    ls = request.getfixturevalue(name)
    candidates = isotropy_scan(ls, 2, 6)
    assert any(c.word == (0,) and c.target == 1 for c in candidates)
    doc = candidates[0].to_dict(ls)
    assert doc["level"] == 6
    assert len(doc["class_chain"]) == 7


def test_two_cycle_isotropy_word(ls_cycle):
    words = {c.word for c in isotropy_scan(ls_cycle, 2, 6)}
    assert (0,) in words
    # a a returns to the root, which is not a candidate
    assert (0, 0) not in words


def test_isotropy_stable_under_doubling(ls_grig, grigorchuk):
    wide = classify(grigorchuk, 4, 192)
    assert wide.saturated_to(4)
    here = [c.to_dict(ls_grig) for c in isotropy_scan(ls_grig, 3)]
    there = [c.to_dict(wide) for c in isotropy_scan(wide, 3)]
    assert here == there


def test_isotropy_needs_saturated_levels(ls_grig_small):
    with pytest.raises(Unsaturated):
        isotropy_scan(ls_grig_small, 2)


def test_base_independence(integers):
    report = base_independence_check(integers, integers.with_base(5), 3, 6)
    assert report.passed
    assert report.details["classes"] == 1


def test_two_cycle_base_independence(two_cycle):
    report = base_independence_check(two_cycle, two_cycle.with_base(1), 3, 6)
    assert report.passed
    assert report.details["classes"] == 1


def test_grigorchuk_base_independence(grigorchuk, ls_grig):
    neighbor = grigorchuk.apply(0, grigorchuk.base)
    report = base_independence_check(grigorchuk, grigorchuk.with_base(neighbor), 3, 64)
    assert report.passed
    assert report.details["classes"] == len(ls_grig.level(3))


def test_combine_precedence():
    assert combine([Outcome.PASS, Outcome.UNDECIDED]) is Outcome.UNDECIDED
    assert combine([Outcome.UNDECIDED, Outcome.FAIL]) is Outcome.FAIL
    assert combine([]) is Outcome.PASS
    assert [o.exit_code for o in Outcome] == [0, 1, 2]


def test_report_rendering():
    report = CheckReport("demo", Outcome.FAIL, {"x": 1}, [{"w": i} for i in range(60)])
    assert len(report.to_dict()["witnesses"]) == 50
    assert str(report).startswith("[demo] FAIL")
    assert str(CheckReport("demo", Outcome.PASS)) == "[demo] OK"
