import math
import os
import sys
from unittest.mock import MagicMock, patch

import numpy as np
import pandas as pd
import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from struve_bounds.errors import MultipleSignChanges, NoSignChange, UnknownBound
from struve_bounds.models import BoundSpec, Grid
from struve_bounds.reference_tables import (
    REFERENCE_CELL_CORRECTIONS,
    REFERENCE_CROSSOVER_CORRECTIONS,
    REFERENCE_CROSSOVERS,
    REFERENCE_TABLES,
)
from struve_bounds.verify_engine import (
    TABLE_SPECS,
    certify,
    crossover,
    crossover_suite,
    default_grid,
    experimental_eq14_extension,
    large_x_tightness,
    monotonicity_suite,
    published_deviation,
    published_table,
    relative_error_table,
    report_to_csv,
    table_from_csv,
    table_to_csv,
    table_to_text,
    turan_gap,
)


@pytest.fixture
def half_grid():
    return Grid(nu_values=[0.5, 1.0, 2.5], x_values=[0.1, 1.0, 5.0, 20.0])


# --- grid and certification ---

def test_default_grid_layout():
    grid = default_grid()
    assert len(grid.nu_values) == 14
    assert len(grid.x_values) == 60
    assert grid.x_values[0] == pytest.approx(1e-3)
    assert grid.x_values[-1] == pytest.approx(50.0)
    assert grid.y_values(30.0) == [45.0]


def test_certify_bessel_upper_has_no_violations(half_grid):
    report = certify("eq17_upper", half_grid)
    assert report.passed
    assert report.points_checked == 12
    assert report.errors == 0
    assert report.worst_slack > 0.0


def test_equality_points_are_not_violations(half_grid):
    report = certify("eq20_upper", half_grid)
    at_half = [p for p in report.points if p.nu == 0.5]
    assert at_half and all(p.status == "equality" and p.slack == 0.0 for p in at_half)
    assert report.passed


def test_product_difference_positivity(half_grid):
    report = certify("eq14_positivity", half_grid)
    assert report.passed
    assert all(p.slack > 0.0 for p in report.points)


def test_grid_is_clipped_to_validity_range(half_grid):
    report = certify("eq19_lower", half_grid)
    assert all(p.nu > 0.5 for p in report.points)
    assert report.notes


def test_argument_ratio_bound_uses_y_values(small_grid):
    report = certify("eq38_upper", small_grid)
    assert report.passed
    assert all(p.y is not None and p.y > p.x for p in report.points)


def test_unknown_bound():
    with pytest.raises(UnknownBound):
        certify("eq99_upper")


def test_threaded_run_keeps_order(half_grid):
    serial = certify("eq18_lower", half_grid, workers=1)
    threaded = certify("eq18_lower", half_grid, workers=4)
    assert serial.points == threaded.points


def test_experimental_extension_is_labelled(small_grid):
    report = experimental_eq14_extension(small_grid)
    assert report.bound_id.endswith("[experimental]")
    assert all(-0.5 <= p.nu < 0.5 for p in report.points)
    assert report.notes


def test_report_csv_header(half_grid):
    text = report_to_csv([certify("eq17_upper", half_grid)])
    assert text.splitlines()[0] == "bound_id,nu,x,y,slack,status"
    assert len(text.splitlines()) == 13


# --- property suites ---

def test_monotonicity_suite_passes(small_grid):
    reports = monotonicity_suite(small_grid)
    assert [r.bound_id for r in reports] == [
        "b_decreasing_in_x",
        "b_increasing_in_nu",
        "ratio_decreasing_in_nu",
        "turan",
        "m_ratio_lower",
        "csch_lower_reversal",
        "recurrence_residuals",
    ]
    for report in reports:
        assert report.passed, report.bound_id


def test_turan_gap_at_half():
    assert turan_gap(0.5, 1.0) > 0.0
    # recurrence path below -1/2
    assert turan_gap(-1.0, 2.0) > 0.0


def test_large_x_tightness():
    report = large_x_tightness()
    assert report.passed
    assert any("infinity" in note for note in report.notes)


def _always_raises(nu, x):
    raise ArithmeticError("no value")


def test_errors_fail_the_report(half_grid):
    spec = BoundSpec(id="always_fails", target="succ_ratio_L", side="lower", nu_min=0.0, formula=_always_raises)
    with patch.dict("struve_bounds.registry.REGISTRY", {"always_fails": spec}):
        report = certify("always_fails", half_grid)
    assert not report.violations
    assert report.errors == report.points_checked == 12
    assert not report.passed


# --- crossovers ---

@pytest.mark.parametrize("bound_a,bound_b,nu,published,tol", REFERENCE_CROSSOVERS)
def test_published_crossovers(bound_a, bound_b, nu, published, tol):
    assert crossover(bound_a, bound_b, nu) == pytest.approx(published, abs=tol)


def test_crossover_suite_all_ok():
    frame = crossover_suite()
    assert len(frame) == len(REFERENCE_CROSSOVERS) + 1
    assert frame["ok"].all()


def test_no_sign_change():
    with pytest.raises(NoSignChange):
        crossover("eq17_lower", "eq17_upper", 1.0)


@patch("struve_bounds.verify_engine.get_bound")
def test_multiple_sign_changes(mock_get_bound):
    """Mocked bounds whose difference is sin(x)."""
    oscillating, flat = MagicMock(), MagicMock()
    oscillating.evaluate.side_effect = lambda nu, x: math.sin(x)
    flat.evaluate.side_effect = lambda nu, x: 0.0
    mock_get_bound.side_effect = [oscillating, flat]
    with pytest.raises(MultipleSignChanges):
        crossover("a", "b", 1.0)


@pytest.mark.parametrize("key,values", sorted(REFERENCE_CROSSOVER_CORRECTIONS.items()))
def test_corrected_crossover(key, values):
    bound_a, bound_b, nu = key
    printed, reproduced = values
    computed = crossover(bound_a, bound_b, nu)
    assert computed == pytest.approx(reproduced, abs=0.02)
    assert abs(computed - printed) > 0.1


@patch("struve_bounds.verify_engine.get_bound")
def test_rounding_noise_is_not_a_sign_change(mock_get_bound):
    """Two bounds equal up to alternating last-bit noise."""
    noisy, flat = MagicMock(), MagicMock()
    noisy.evaluate.side_effect = lambda nu, x: 1.0 + math.copysign(2e-16, math.sin(50.0 * x))
    flat.evaluate.side_effect = lambda nu, x: 1.0
    mock_get_bound.side_effect = [noisy, flat]
    with pytest.raises(NoSignChange):
        crossover("a", "b", 1.0)


# --- tables ---

@pytest.mark.parametrize("table_id", sorted(REFERENCE_TABLES))
def test_table_matches_published_values(table_id):
    spec = TABLE_SPECS[table_id]
    frame = relative_error_table(spec)
    assert list(frame.index) == spec.nu_rows
    assert list(frame.columns) == spec.x_cols
    deviation = published_deviation(table_id, frame)
    assert np.nanmax(deviation.values) <= 2e-4


def test_zero_column_limits():
    table2 = relative_error_table(TABLE_SPECS[2])
    assert math.isinf(table2.loc[0.0, 0.0])
    assert table2.loc[10.0, 0.0] == pytest.approx(0.05)
    table4 = relative_error_table(TABLE_SPECS[4])
    assert math.isinf(table4.loc[0.5, 0.0])
    assert table4.loc[1.0, 0.0] == pytest.approx(2.0)
    assert (relative_error_table(TABLE_SPECS[1])[0.0] == 0.0).all()


def test_pointwise_tables_have_no_zero_column():
    assert TABLE_SPECS[5].zero_column_rule is None
    assert 0.0 not in TABLE_SPECS[6].x_cols


def test_table_csv_round_trip():
    frame = relative_error_table(TABLE_SPECS[2])
    parsed = table_from_csv(table_to_csv(frame))
    expected = frame.map(lambda v: v if math.isinf(v) else float(f"{v:.4f}"))
    pd.testing.assert_frame_equal(parsed, expected, check_exact=False, rtol=1e-12)


def test_table_csv_flags_infinite_cells():
    lines = table_to_csv(relative_error_table(TABLE_SPECS[2])).splitlines()
    assert lines[0] == "nu,x,value,infinite"
    assert lines[1] == "0.0,0.0,,1"


def test_table_text_layout():
    text = table_to_text(relative_error_table(TABLE_SPECS[2]), "Table 2")
    lines = text.splitlines()
    assert lines[0] == "Table 2"
    assert "inf" in lines[2]
    assert lines[2].startswith("0 ")


@pytest.mark.parametrize("key,values", sorted(REFERENCE_CELL_CORRECTIONS.items()))
def test_corrected_table_cells(key, values):
    table_id, nu, x = key
    printed, reproduced = values
    computed = relative_error_table(TABLE_SPECS[table_id]).loc[nu, x]
    assert computed == pytest.approx(reproduced, abs=1e-4)
    assert abs(computed - printed) > 2e-4
    assert published_table(table_id, corrected=False).loc[nu, x] == printed
    assert published_table(table_id).loc[nu, x] == reproduced
