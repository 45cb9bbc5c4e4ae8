from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from urskit.errors import ConfigError, LevelMismatch, NotLocal, Unsaturated
from urskit.groupoid import GroupoidFunction
from urskit.kernels import (
    Gaussian,
    LocalKernel,
    add,
    adjacency_kernel,
    adjoint,
    convolve,
    eval_kernel,
    from_groupoid_function,
    identity_kernel,
    identity_suite,
    kernel_from_dict,
    kernel_to_dict,
    kernels_equal,
    lift,
    random_kernel,
    reduce_width,
    scale,
    star,
    sup_norm,
    support_depth,
    times,
    to_groupoid_function,
)
from urskit.reports import Outcome

gaussians = st.builds(Gaussian, st.integers(-20, 20), st.integers(-20, 20))
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussian_rationals = st.builds(Gaussian, rationals, rationals)


def as_sympy(z: Gaussian):
    return (sympy.Rational(z.re.numerator, z.re.denominator)
            + sympy.I * sympy.Rational(z.im.numerator, z.im.denominator))


# ── Gaussian rationals ───────────────────────────────────────────────────────

def test_gaussian_arithmetic():
    z = Gaussian(1, 2) * Gaussian(3, -1)
    assert z == Gaussian(5, 5)
    assert z / Gaussian(3, -1) == Gaussian(1, 2)
    assert Gaussian(0, 1) * Gaussian(0, 1) == -1
    assert Gaussian(3, 4).abs2() == 25
    assert abs(Gaussian(3, 4)) == 5.0
    assert Gaussian(Fraction(1, 2)) == Fraction(1, 2)
    assert not Gaussian(0)


@given(a=gaussians, b=gaussians)
def test_gaussian_field(a, b):
    assert (a + b) - b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b:
        assert (a * b) / b == a


@given(a=gaussian_rationals, b=gaussian_rationals)
def test_gaussian_agrees_with_sympy(a, b):
    za, zb = as_sympy(a), as_sympy(b)
    assert sympy.expand(as_sympy(a + b) - (za + zb)) == 0
    assert sympy.expand(as_sympy(a * b) - za * zb) == 0
    assert sympy.expand(as_sympy(a.conjugate()) - sympy.conjugate(za)) == 0
    assert sympy.Rational(a.abs2().numerator, a.abs2().denominator) == sympy.expand(za * sympy.conjugate(za))
    if b:
        quotient = sympy.expand(za * sympy.conjugate(zb)) / sympy.expand(zb * sympy.conjugate(zb))
        assert sympy.expand(as_sympy(a / b) - sympy.expand(quotient)) == 0


def test_gaussian_text():
    z = Gaussian(Fraction(-1, 3), 2)
    assert repr(z) == "-1/3+2i"
    assert Gaussian.parse(**z.to_dict()) == z
    assert repr(Gaussian(2, -1)) == "2-1i"


def test_gaussian_zero_division():
    with pytest.raises(ZeroDivisionError):
        Gaussian(1) / Gaussian(0)


# ── kernels ──────────────────────────────────────────────────────────────────

def test_adjacency_squared(ls_int):
    A = adjacency_kernel(ls_int)
    A2 = convolve(ls_int, A, A)
    assert A2.width == 2
    assert A2.get(0, 0) == 2
    assert A2.get(0, 1) == 0
    assert A2.get(0, 3) == 1
    assert A2.get(0, 4) == 1


def test_adjacency_counts_loops(ls_grig):
    A = adjacency_kernel(ls_grig)
    # the base vertex is fixed by b, c and d
    totals = [sum(A.get(c, j) for j in range(len(t))) for c, t in enumerate(ls_grig.level(1).classes)]
    assert all(total == 4 for total in totals)
    assert any(A.get(c, 0) == 3 for c in range(len(ls_grig.level(1))))


def test_adjoint_conjugates_and_reverses(ls_int):
    K = LocalKernel(1, ls_int.oracle_hash, {(0, 1): Gaussian(0, 1)})
    Kstar = adjoint(ls_int, K)
    assert Kstar.width == 2
    reduced = star(ls_int, K)
    assert reduced.width == 1
    assert reduced.entries == {(0, 2): Gaussian(0, -1)}


def test_identity_is_neutral(ls_int):
    d = identity_kernel(ls_int)
    A = adjacency_kernel(ls_int)
    assert kernels_equal(ls_int, times(ls_int, d, A), A)
    assert kernels_equal(ls_int, times(ls_int, A, d), A)


def test_linear_structure(ls_int):
    A = adjacency_kernel(ls_int)
    assert len(add(ls_int, A, scale(-1, A))) == 0
    assert kernels_equal(ls_int, lift(ls_int, A, 4), A)
    assert kernels_equal(ls_int, reduce_width(ls_int, lift(ls_int, A, 4)), A)
    assert reduce_width(ls_int, lift(ls_int, A, 4)).width == 1
    assert sup_norm(scale(Gaussian(0, 2), A)) == 2.0
    assert support_depth(ls_int, A) == 1
    with pytest.raises(ValueError):
        lift(ls_int, A, 0)


def test_eval_kernel(ls_int, integers):
    A = adjacency_kernel(ls_int)
    assert eval_kernel(ls_int, A, integers, 0, 1) == 1
    assert eval_kernel(ls_int, A, integers, 7, 6) == 1
    assert eval_kernel(ls_int, A, integers, 0, 0) == 0
    assert eval_kernel(ls_int, A, integers, 0, 2) == 0


def test_level_mismatch(ls_int, ls_cycle):
    A = adjacency_kernel(ls_cycle)
    with pytest.raises(LevelMismatch):
        convolve(ls_int, A, A)


def test_function_dictionary(ls_int):
    K = random_kernel(ls_int, 2, np.random.default_rng(7))
    f = to_groupoid_function(ls_int, K)
    assert kernels_equal(ls_int, from_groupoid_function(ls_int, f), K)
    with pytest.raises(NotLocal):
        from_groupoid_function(ls_int, GroupoidFunction(1, {}, 1))


def test_kernel_documents(ls_int):
    K = random_kernel(ls_int, 1, np.random.default_rng(3))
    assert kernel_from_dict(kernel_to_dict(K)) == K
    with pytest.raises(ConfigError):
        kernel_from_dict({"width": 1})


# ── identity suites ──────────────────────────────────────────────────────────

def test_identity_suite_integers(ls_int, integers):
    kernels = {
        "d": identity_kernel(ls_int),
        "A": adjacency_kernel(ls_int),
        "K": random_kernel(ls_int, 1, np.random.default_rng(0)),
    }
    report = identity_suite(ls_int, kernels, integers)
    assert report.outcome is Outcome.PASS, report.details["failed"]
    assert "(AK)*=K*A*" in report.details["passed"]
    assert "eval(K)" in report.details["passed"]


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), width=st.integers(1, 2))
def test_random_kernel_identities(ls_int, seed, width):
    rng = np.random.default_rng(seed)
    kernels = {"K": random_kernel(ls_int, width, rng), "L": random_kernel(ls_int, 1, rng)}
    report = identity_suite(ls_int, kernels)
    assert report.outcome is Outcome.PASS, report.details["failed"]


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_random_kernel_identities_grigorchuk(ls_grig, seed):
    K = random_kernel(ls_grig, 1, np.random.default_rng(seed))
    report = identity_suite(ls_grig, {"K": K})
    assert report.outcome is Outcome.PASS, report.details["failed"]
    assert report.details["skipped"] == []


def test_identity_suite_grigorchuk(ls_grig, grigorchuk):
    kernels = {"A": adjacency_kernel(ls_grig), "K": random_kernel(ls_grig, 1, np.random.default_rng(2))}
    report = identity_suite(ls_grig, kernels, grigorchuk)
    assert report.outcome is Outcome.PASS, report.details["failed"]
    assert "(AK)A=A(KA)" in report.details["passed"]


def test_products_need_saturated_levels(ls_grig_small):
    A = adjacency_kernel(ls_grig_small)
    with pytest.raises(Unsaturated):
        convolve(ls_grig_small, A, A)
    with pytest.raises(Unsaturated):
        adjoint(ls_grig_small, A)
    with pytest.raises(Unsaturated):
        reduce_width(ls_grig_small, A)
    report = identity_suite(ls_grig_small, {"A": A})
    assert report.outcome is Outcome.UNDECIDED
    assert report.details["failed"] == []
    assert "(AA)*=A*A*" in report.details["skipped"]


def test_identity_suite_on_free_group(ls_free):
    kernels = {"A": adjacency_kernel(ls_free), "K": random_kernel(ls_free, 1, np.random.default_rng(1))}
    report = identity_suite(ls_free, kernels)
    assert report.details["failed"] == []
    assert report.outcome in (Outcome.PASS, Outcome.UNDECIDED)
