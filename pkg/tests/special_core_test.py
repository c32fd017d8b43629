import math
import os
import sys

import numpy as np
import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from struve_bounds.errors import CancellationWarning, ConvergenceError, DomainError, OverflowRisk
from struve_bounds.models import EvalConfig
from struve_bounds.special_core import (
    asym_large_x,
    bessel_i,
    gamma_pos,
    half_integer_closed,
    inhomogeneous_term,
    quad_oracle_i,
    quad_oracle_l,
    ratio_succ_exact,
    recurrence_check,
    small_x_leading,
    struve_l,
    struve_m,
)

CLOSED_FORM_X = np.geomspace(0.01, 30.0, 200)


# --- closed forms ---

@pytest.mark.parametrize("kind", ["I", "L"])
@pytest.mark.parametrize("nu", [-0.5, 0.5])
def test_series_matches_half_integer_closed_forms(kind, nu):
    """Series and elementary forms agree to 1e-12 on [0.01, 30]."""
    evaluator = bessel_i if kind == "I" else struve_l
    for x in CLOSED_FORM_X:
        x = float(x)
        assert evaluator(nu, x).value == pytest.approx(half_integer_closed(kind, nu, x), rel=1e-12)


def test_struve_l_minus_three_halves_matches_closed_form():
    for x in CLOSED_FORM_X:
        x = float(x)
        assert struve_l(-1.5, x).value == pytest.approx(half_integer_closed("L", -1.5, x), rel=1e-12)


def test_bessel_i_minus_three_halves_matches_closed_form():
    """I_{-3/2} changes sign near x = 1.2; compare against the size of its terms there."""
    for x in CLOSED_FORM_X:
        x = float(x)
        scale = math.sqrt(2.0 / (math.pi * x)) * (math.sinh(x) + math.cosh(x) / x)
        closed = half_integer_closed("I", -1.5, x)
        assert abs(bessel_i(-1.5, x).value - closed) <= 1e-12 * scale


# --- quadrature cross-check ---

@pytest.mark.parametrize("nu", [0.3, 1.0, 2.5, 5.0])
@pytest.mark.parametrize("x", [0.5, 1.0, 2.5, 5.0, 10.0, 20.0])
def test_series_agrees_with_quadrature(nu, x):
    assert bessel_i(nu, x).value == pytest.approx(quad_oracle_i(nu, x), rel=1e-10)
    assert struve_l(nu, x).value == pytest.approx(quad_oracle_l(nu, x), rel=1e-10)


def test_oracle_rejects_low_orders():
    with pytest.raises(DomainError):
        quad_oracle_l(-0.5, 1.0)


# --- domain handling ---

def test_negative_integer_order_is_reflected():
    assert bessel_i(-2.0, 3.0).value == pytest.approx(bessel_i(2.0, 3.0).value, rel=1e-15)


def test_struve_l_below_floor_raises():
    with pytest.raises(DomainError):
        struve_l(-2.0, 1.0)


@pytest.mark.parametrize("x", [0.0, -1.0, float("nan")])
def test_bad_argument_raises(x):
    with pytest.raises(DomainError):
        struve_l(0.0, x)


def test_argument_beyond_x_max_raises():
    with pytest.raises(OverflowRisk):
        bessel_i(0.0, 700.0)


def test_series_cap_raises_convergence_error():
    """A 50-term cap cannot cover the series at x = 500."""
    with pytest.raises(ConvergenceError):
        struve_l(0.0, 500.0, EvalConfig(max_terms=50))


def test_gamma_pos():
    assert gamma_pos(5.0) == pytest.approx(24.0)
    with pytest.raises(DomainError):
        gamma_pos(-1.0)


def test_func_value_metadata():
    result = struve_l(1.0, 3.0)
    assert result.terms_used > 0
    assert 0.0 <= result.est_rel_error < 1e-14
    assert not result.cancellation


# --- M_nu ---

@pytest.mark.parametrize("nu", [-0.5, 0.0, 1.0, 3.0])
@pytest.mark.parametrize("x", [0.1, 2.0, 15.0, 40.0])
def test_struve_m_is_negative(nu, x):
    assert struve_m(nu, x).value < 0.0


def test_struve_m_closed_form_at_large_x():
    x = 30.0
    with pytest.warns(CancellationWarning):
        result = struve_m(-0.5, x)
    assert result.cancellation
    assert result.value == pytest.approx(-math.sqrt(2.0 / (math.pi * x)) * math.exp(-x), rel=1e-14)


def test_struve_m_matches_large_x_expansion():
    """M_0(x) ~ -(2/pi)(1/x + 1/x^3) for large x."""
    x = 20.0
    expected = -(2.0 / math.pi) * (1.0 / x + 1.0 / x ** 3)
    assert struve_m(0.0, x).value == pytest.approx(expected, rel=1e-4)


# --- recurrences, asymptotics ---

@pytest.mark.parametrize("nu", [-0.25, 0.0, 1.0, 5.0, 10.0])
@pytest.mark.parametrize("x", [1e-3, 0.7, 6.0, 45.0])
def test_recurrence_residuals(nu, x):
    first, second = recurrence_check(nu, x)
    assert first <= 1e-12
    assert second <= 1e-12


def test_inhomogeneous_term_at_zero_order():
    x = 2.0
    assert inhomogeneous_term(0.0, x) == pytest.approx(1.0 / (math.sqrt(math.pi) * gamma_pos(1.5)))


def test_ratio_succ_exact_matches_evaluators():
    expected = struve_l(2.0, 4.0).value / struve_l(1.0, 4.0).value
    assert ratio_succ_exact("L", 2.0, 4.0) == pytest.approx(expected, rel=1e-15)
    with pytest.raises(DomainError):
        ratio_succ_exact("M", 0.0, 1.0)


@pytest.mark.parametrize("kind", ["I", "L"])
def test_asym_large_x(kind):
    evaluator = bessel_i if kind == "I" else struve_l
    assert asym_large_x(kind, 1.0, 40.0) == pytest.approx(evaluator(1.0, 40.0).value, rel=1e-4)


@pytest.mark.parametrize("kind", ["I", "L"])
def test_small_x_leading(kind):
    evaluator = bessel_i if kind == "I" else struve_l
    assert small_x_leading(kind, 0.75, 1e-3) == pytest.approx(evaluator(0.75, 1e-3).value, rel=1e-6)
