import pytest
from hypothesis import given, strategies as st

from urskit.errors import InfinityArrow, PrecisionExhausted
from urskit.groupoid import (
    ArrowClass,
    Infinity,
    arrow_distance,
    build_F,
    compose,
    composable,
    depth,
    divide,
    invert_arrow,
    is_unit,
    project_arrow,
    range_of,
    source,
    unit,
)

N = 8


@pytest.mark.parametrize("n", range(9))
def test_integer_arrow_counts(ls_int, n):
    assert len(build_F(ls_int, n)) == 2 * n + 2


def test_two_cycle_arrow_counts(ls_cycle):
    assert len(build_F(ls_cycle, 0)) == 2
    assert len(build_F(ls_cycle, 2)) == 3


def test_f_map_projects(ls_int):
    F = build_F(ls_int, 2)
    assert F.f_map[ArrowClass(3, 0, 5)] == Infinity(2)
    assert F.f_map[ArrowClass(3, 0, 3)] == ArrowClass(2, 0, 3)
    assert F.f_map[Infinity(3)] == Infinity(2)
    assert F.unit_of == [unit(2, 0)]
    assert F.to_dict()["level"] == 2


def _arrows(ls, n):
    ball = ls.ball(n, 0)
    return st.integers(0, len(ball) - 1).map(lambda j: ArrowClass(n, 0, j))


@given(data=st.data())
def test_inverse_is_involutive(ls_int, data):
    a = data.draw(_arrows(ls_int, N))
    d = depth(ls_int, a)
    if 2 * d > N:
        return
    assert invert_arrow(ls_int, invert_arrow(ls_int, a)) == project_arrow(ls_int, a, N - 2 * d)


@given(data=st.data())
def test_arrow_times_inverse_is_unit(ls_int, data):
    a = data.draw(_arrows(ls_int, N))
    d = depth(ls_int, a)
    if 2 * d > N:
        return
    inv = invert_arrow(ls_int, a)
    assert range_of(inv) == source(ls_int, a)
    assert is_unit(compose(ls_int, a, inv))


@given(data=st.data())
def test_units_are_neutral(ls_free, data):
    n = ls_free.n_max
    a = data.draw(_arrows(ls_free, n))
    d = depth(ls_free, a)
    assert compose(ls_free, unit(n, 0), a) == a
    if 2 * d <= n:
        src = source(ls_free, a)
        assert compose(ls_free, a, unit(src.level, src.id)) == project_arrow(ls_free, a, n - d)


@given(data=st.data())
def test_divide_by_self_is_unit(ls_free, data):
    a = data.draw(_arrows(ls_free, ls_free.n_max))
    assert is_unit(divide(ls_free, a, a))


def test_composition_on_the_line(ls_int):
    # +1 then +2 lands at +3, two levels lower
    a = ArrowClass(6, 0, 1)
    b = ArrowClass(5, 0, 3)
    assert composable(ls_int, a, b)
    c = compose(ls_int, a, b)
    assert c.level == 5
    assert ls_int.ball(5, 0).representative(c.target) == (0, 0, 0)


def test_composition_needs_precision(ls_int):
    with pytest.raises(PrecisionExhausted):
        compose(ls_int, ArrowClass(4, 0, 7), ArrowClass(1, 0, 1))


def test_infinity_has_no_structure(ls_int):
    inf = Infinity(3)
    with pytest.raises(InfinityArrow):
        range_of(inf)
    with pytest.raises(InfinityArrow):
        source(ls_int, inf)
    with pytest.raises(InfinityArrow):
        invert_arrow(ls_int, inf)
    assert not composable(ls_int, inf, unit(3, 0))
    assert project_arrow(ls_int, inf, 1) == Infinity(1)


def test_distance(ls_int):
    a, b = ArrowClass(6, 0, 1), ArrowClass(6, 0, 3)
    assert arrow_distance(ls_int, a, a).exponent == 6
    assert not arrow_distance(ls_int, a, a).exact
    # +1 and +2 agree once both project to infinity at level 0
    dist = arrow_distance(ls_int, a, b)
    assert dist.exact and dist.exponent == 0
    assert dist.value == 1.0
