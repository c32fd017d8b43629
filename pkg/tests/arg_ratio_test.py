import math
import os
import sys

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from struve_bounds.arg_ratio_bounds import (
    ARG_RATIO_BOUNDS,
    a_nu_constant,
    a_nu_crossover,
    arg_ratio_bessel_bracket,
    arg_ratio_exact,
    arg_ratio_explicit_bracket,
    arg_ratio_prior_bounds,
    eq33b_upper,
    eq34_upper,
    eq38_lower,
    eq38_upper,
    eq39_upper,
    eq42_lower,
    eq43_upper,
    eq46_constant,
    pointwise_bracket,
    pointwise_prior_upper,
    pointwise_upper_scaled,
)
from struve_bounds.errors import DomainError
from struve_bounds.models import ArgPair
from struve_bounds.special_core import struve_l

REL = 1e-12


def test_coincident_arguments_give_unit_bracket():
    pair = ArgPair(x=2.0, y=2.0)
    assert arg_ratio_exact(1.0, pair) == 1.0
    bracket = arg_ratio_explicit_bracket(1.0, pair)
    assert bracket.lower == bracket.upper == 1.0
    assert arg_ratio_bessel_bracket(1.0, pair).is_ordered()


def test_reversed_arguments_raise():
    with pytest.raises(DomainError):
        arg_ratio_exact(1.0, ArgPair(x=3.0, y=2.0))


@pytest.mark.parametrize("nu", [-0.5, 0.0, 0.5, 1.0, 5.0])
@pytest.mark.parametrize("x,y", [(0.1, 0.3), (1.0, 4.0), (5.0, 50.0)])
def test_brackets_contain_ratio(nu, x, y):
    pair = ArgPair(x=x, y=y)
    exact = arg_ratio_exact(nu, pair)
    explicit = arg_ratio_explicit_bracket(nu, pair)
    assert explicit.lower < exact < explicit.upper
    bessel = arg_ratio_bessel_bracket(nu, pair)
    assert bessel.lower_valid and bessel.lower < exact
    if nu >= 0.5:
        assert bessel.upper_valid and exact < bessel.upper


def test_cosh_upper_is_exact_at_half():
    x, y = 1.5, 6.0
    exact = arg_ratio_exact(0.5, ArgPair(x=x, y=y))
    assert eq34_upper(0.5, x, y) == pytest.approx(exact, rel=1e-10)


def test_explicit_lower_dominates_exponential_lower():
    for nu in (0.0, 1.0, 4.0):
        assert eq42_lower(nu, 2.0, 9.0) <= eq38_lower(nu, 2.0, 9.0)


@pytest.mark.parametrize("nu,x,y,explicit_wins", [
    (1.0, 0.01, 1.0, True),
    (5.0, 1.0, 60.0, True),
    (0.5, 1.0, 60.0, False),
    (0.75, 1.0, 60.0, False),
])
def test_explicit_upper_against_exponential_upper(nu, x, y, explicit_wins):
    """Smaller near x = 0 and for nu > 3/2 at large y; larger for nu < 3/2 at large y."""
    assert (eq38_upper(nu, x, y) < eq33b_upper(nu, x, y)) == explicit_wins


def test_prior_variants():
    pair = ArgPair(x=1.0, y=3.0)
    exact = arg_ratio_exact(1.0, pair)
    assert arg_ratio_prior_bounds(1.0, pair, "eq33a") > exact
    assert arg_ratio_prior_bounds(1.0, pair, "hbv_combined") < exact
    with pytest.raises(DomainError):
        arg_ratio_prior_bounds(1.0, pair, "eq99")


# --- pointwise bounds on L_nu ---

@pytest.mark.parametrize("nu", [-0.5, 0.0, 1.0, 5.0])
@pytest.mark.parametrize("x", [0.1, 1.0, 10.0, 50.0])
def test_pointwise_bracket_contains_struve(nu, x):
    bracket = pointwise_bracket(nu, x)
    assert bracket.lower < struve_l(nu, x).value < bracket.upper


@pytest.mark.parametrize("variant", ["eq43", "eq45", "eq46"])
def test_pointwise_prior_uppers(variant):
    for x in (0.5, 5.0, 40.0):
        assert pointwise_prior_upper(1.0, x, variant) > struve_l(1.0, x).value


def test_eq46_constant():
    assert eq46_constant(0.0) == pytest.approx(0.5079, abs=1e-4)


def test_a_nu_constant_value():
    assert a_nu_constant(0.0).value == pytest.approx(1.158388, abs=1e-5)


def test_a_nu_crossover():
    assert a_nu_crossover() == pytest.approx(2.521, abs=0.005)


@pytest.mark.parametrize("nu", [0.0, 1.0, 2.5, 5.0, 10.0])
def test_scaled_upper_tends_to_a_nu(nu):
    """Upper bound * sqrt(x) e^(-x) = a_nu exp(-(nu + 1/2)^2 / (2x)) + O(1/x)."""
    x = 400.0
    corrected = pointwise_upper_scaled(nu, x) * math.exp((nu + 0.5) ** 2 / (2.0 * x))
    assert corrected == pytest.approx(a_nu_constant(nu).value, rel=0.02)


@given(st.floats(min_value=-0.49, max_value=100.0, allow_nan=False, allow_infinity=False))
@settings(max_examples=500, deadline=None)
def test_a_nu_inside_stirling_bracket(nu):
    constant = a_nu_constant(nu)
    assert constant.stirling_lower <= constant.value * (1.0 + REL)
    assert constant.value <= constant.stirling_upper * (1.0 + REL)


@given(
    st.floats(min_value=-0.5, max_value=10.0, allow_nan=False, allow_infinity=False),
    st.floats(min_value=1e-2, max_value=20.0, allow_nan=False, allow_infinity=False),
    st.floats(min_value=1.1, max_value=3.0, allow_nan=False, allow_infinity=False),
)
@settings(max_examples=100, deadline=None)
def test_every_registered_argument_ratio_bound_holds(nu, x, factor):
    y = x * factor
    assume(y <= 60.0)
    exact = arg_ratio_exact(nu, ArgPair(x=x, y=y))
    for spec in ARG_RATIO_BOUNDS:
        if spec.target != "arg_ratio_L" or not spec.valid_for(nu):
            continue
        value = spec.evaluate(nu, x, y)
        if spec.side == "lower":
            assert value <= exact * (1.0 + REL), spec.id
        else:
            assert value >= exact * (1.0 - REL), spec.id


@given(
    st.floats(min_value=0.0, max_value=10.0, allow_nan=False, allow_infinity=False),
    st.floats(min_value=1e-3, max_value=100.0, allow_nan=False, allow_infinity=False),
)
@settings(max_examples=200, deadline=None)
def test_pointwise_upper_beats_elementary_upper(nu, x):
    assert eq39_upper(nu, x) <= eq43_upper(nu, x) * (1.0 + REL)
