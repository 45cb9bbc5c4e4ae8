from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from urskit.amenability import (
    AmenabilityFunction,
    PropAWitness,
    amenability_check,
    backward_bridge,
    ball_indicator_witness,
    check_witness,
    derive_epsilon_schedule,
    epsilon_schedule_check,
    flatten,
    forward_bridge,
    functions_to_witness,
    normalization_check,
    normalized,
    witness_to_functions,
)
from urskit.balls import classify
from urskit.errors import ConfigError, ZeroNormFiber
from urskit.groupoid import GroupoidFunction
from urskit.reports import Outcome


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_integer_indicator_passes(ls_int_long, n):
    w = ball_indicator_witness(ls_int_long, n, n ** 3)
    report = check_witness(ls_int_long, w)
    assert report.outcome is Outcome.PASS
    # ||rho_x - rho_y||^2 = 2d / (2k + 1) at distance d = n
    assert report.details["max_distance"] == pytest.approx((2 * n / (2 * n ** 3 + 1)) ** 0.5)
    assert report.details["max_norm_deviation"] < 1e-12


def test_small_indicator_fails(ls_int):
    report = check_witness(ls_int, ball_indicator_witness(ls_int, 4, 4))
    assert report.outcome is Outcome.FAIL
    assert report.witnesses


@pytest.mark.parametrize("k", [2, 3])
def test_free_group_indicator_fails(free2, k):
    # n^3 = 8 would need level 10 of the 4-regular tree; the gap does not close with k anyway
    ls = classify(free2, k + 2, k + 2, repetitivity_bound=0)
    report = check_witness(ls, ball_indicator_witness(ls, 2, k))
    assert report.outcome is Outcome.FAIL
    # at distance 2 each ball has 3^k + 3^(k-1) vertices the other lacks, out of 2 * 3^k - 1
    assert report.details["max_distance"] == pytest.approx((8 * 3 ** (k - 1) / (2 * 3 ** k - 1)) ** 0.5)


def test_two_cycle_uniform_witness(ls_cycle):
    w = ball_indicator_witness(ls_cycle, 2, 2)
    assert set(w.values.values()) == {1 / sympy.sqrt(2)}
    report = check_witness(ls_cycle, w)
    assert report.outcome is Outcome.PASS
    assert report.details["max_distance"] == 0.0


def test_forward_bridge(ls_int):
    w = ball_indicator_witness(ls_int, 2, 8)
    fn = witness_to_functions(ls_int, w)
    assert fn.locality == 8
    assert fn.vanishing_radius == 8
    amen = amenability_check(ls_int, fn)
    assert amen.outcome is Outcome.PASS
    assert amen.details["fiber_norm_deviation"] == 0.0
    assert amen.details["max_deviation_compact"] <= 0.5
    # 1 - <rho_x, rho_y> = d / (2k + 1)
    assert amen.details["max_deviation_by_depth"]["1"] == pytest.approx(1 / 17)
    report = forward_bridge(ls_int, w)
    assert report.outcome is Outcome.PASS
    assert report.details["roundtrip"]


def test_functions_roundtrip(ls_int):
    w = ball_indicator_witness(ls_int, 2, 3)
    fn = witness_to_functions(ls_int, w)
    back = functions_to_witness(ls_int, fn)
    assert back.values == w.values
    assert back.n == w.n and back.radius == w.radius
    with pytest.raises(ValueError):
        functions_to_witness(ls_int, fn.function)


def test_backward_bridge(ls_int):
    fn = witness_to_functions(ls_int, ball_indicator_witness(ls_int, 2, 8))
    report = backward_bridge(ls_int, fn)
    assert report.outcome is Outcome.PASS
    assert report.details["epsilon"] == "0"
    assert report.details["schedule_ok"]


def test_backward_bridge_flattens(ls_int):
    fn = witness_to_functions(ls_int, ball_indicator_witness(ls_int, 2, 8))
    report = backward_bridge(ls_int, fn, N=7)
    # the outer shell is dropped, so eps is the indicator height
    assert float(Fraction(report.details["epsilon"])) == pytest.approx(1 / 17 ** 0.5, rel=1e-9)
    assert not report.details["schedule_ok"]


# ── flattening ───────────────────────────────────────────────────────────────

def test_flatten_is_idempotent(ls_int):
    f = witness_to_functions(ls_int, ball_indicator_witness(ls_int, 2, 2)).function
    flat, eps = flatten(ls_int, f, 2)
    assert eps == 0
    assert flat.values == f.values
    again, eps2 = flatten(ls_int, flat, 2)
    assert again.values == flat.values and eps2 == 0


def test_flatten_error(ls_int):
    f = witness_to_functions(ls_int, ball_indicator_witness(ls_int, 2, 2)).function
    flat, eps = flatten(ls_int, f, 1)
    assert flat.level == 1
    assert len(flat.values) == 3
    assert float(eps) == pytest.approx(1 / 5 ** 0.5)
    with pytest.raises(ValueError):
        flatten(ls_int, f, 3)


def test_flatten_reads_smallest_class_id(ls_grig):
    c = next(c for c in range(len(ls_grig.level(1))) if len(ls_grig.refinements(1, c, 2)) > 1)
    first, second = ls_grig.refinements(1, c, 2)[:2]
    f = GroupoidFunction(2, {(second, 0): 7, (first, 0): 5})
    flat, eps = flatten(ls_grig, f, 1)
    assert flat.values[(c, 0)] == 5
    assert eps >= 2


# ── epsilon schedules ────────────────────────────────────────────────────────

def test_epsilon_schedule_example():
    eps = derive_epsilon_schedule(2, 1, 1, 2)
    assert eps == Fraction(1, 96)
    assert epsilon_schedule_check(2, 1, 1, eps, 2)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_unit_epsilon_violates(n):
    assert not epsilon_schedule_check(n, 1, 1, 1, 2)


@given(n=st.integers(1, 20), T=st.integers(0, 4),
       sup=st.fractions(min_value=0, max_value=10, max_denominator=50),
       q=st.integers(1, 6))
def test_derived_schedule_always_holds(n, T, sup, q):
    eps = derive_epsilon_schedule(n, T, sup, q)
    assert epsilon_schedule_check(n, T, sup, eps, q)


# ── normalization ────────────────────────────────────────────────────────────

def test_normalization(ls_int):
    raw = PropAWitness(2, 2, ls_int.oracle_hash, {(0, j): sympy.Integer(j + 1) for j in range(5)})
    unit = normalized(ls_int, raw)
    assert sum(v ** 2 for v in unit.values.values()) == 1
    assert normalization_check(ls_int, raw).passed
    with pytest.raises(ZeroNormFiber):
        normalized(ls_int, PropAWitness(2, 2, ls_int.oracle_hash, {}))


def test_normalizing_ball_counts(ls_int):
    # un-normalized indicator: fiber norms equal the ball size
    w = ball_indicator_witness(ls_int, 2, 8)
    raw = PropAWitness(2, 8, w.level_hash, {k: sympy.Integer(1) for k in w.values})
    fn = AmenabilityFunction(2, 8, witness_to_functions(ls_int, raw).function)
    assert amenability_check(ls_int, fn).outcome is Outcome.FAIL
    assert normalized(ls_int, raw).values == w.values


def test_witness_documents(ls_int):
    w = ball_indicator_witness(ls_int, 2, 3)
    back = PropAWitness.from_dict(w.to_dict())
    assert back.values == w.values
    assert back.level_hash == ls_int.oracle_hash
    with pytest.raises(ConfigError):
        PropAWitness.from_dict({"n": 2})
