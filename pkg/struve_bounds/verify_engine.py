# struve_bounds/verify_engine.py
"""
Grid certification of the registered inequalities, property suites, crossover
search and the relative-error tables.

Exact values always come from the power series in special_core; the quadrature
oracles are kept for cross-checking the series and are never used here.
"""
import concurrent.futures
import io
import logging
import math

import numpy as np
import pandas as pd
from scipy import optimize

from struve_bounds.arg_ratio_bounds import a_nu_crossover
from struve_bounds.bfunc import b_kernel, half_x_csch
from struve_bounds.config import worker_count
from struve_bounds.errors import MultipleSignChanges, NoSignChange, StruveError
from struve_bounds.logs_handler import log_error
from struve_bounds.models import EQUALITY_TOL, Grid, GridPoint, GridReport, TableSpec
from struve_bounds.reference_tables import (
    REFERENCE_A_NU_CROSSOVER,
    REFERENCE_CELL_CORRECTIONS,
    REFERENCE_CROSSOVERS,
    REFERENCE_TABLES,
)
from struve_bounds.registry import REGISTRY, exact_value, get_bound
from struve_bounds.special_core import (
    inhomogeneous_term,
    ratio_succ_exact,
    recurrence_check,
    struve_l,
)

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-12
DEFAULT_NU = [-1.4, -1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.5, 5.0, 7.5, 10.0]
DEFAULT_Y_FACTORS = [1.5, 3.0, 10.0]

# equality cases are exempt while the computed slack stays within rounding
EQUALITY_SLACK = 1e-9
RECURRENCE_TOL = 1e-12
SCAN_POINTS = 200
CROSSOVER_XTOL = 1e-4
ROUNDING_ULPS = 64
TINY = 1e-300

TIGHTNESS_NOTE = (
    "Bessel-ratio bracket tightness is checked as x -> infinity; "
    "it does not hold as x -> 0"
)


def default_grid():
    return Grid(
        nu_values=list(DEFAULT_NU),
        x_values=[float(v) for v in np.geomspace(1e-3, 50.0, 60)],
        y_factors=list(DEFAULT_Y_FACTORS),
        y_cap=60.0,
    )


# ------------------------------------------------------------
# Certification
# ------------------------------------------------------------
def _signed_slack(side, bound, exact):
    gap = bound - exact if side == "upper" else exact - bound
    return gap / max(abs(exact), TINY)


def _check_point(spec, nu, x, y, tolerance, check):
    try:
        bound = spec.evaluate(nu, x, y, check=check)
        exact = exact_value(spec.target, nu, x, y)
        slack = _signed_slack(spec.side, bound, exact)
    except (StruveError, ArithmeticError, ValueError) as exc:
        log_error("certify %s failed at nu=%s x=%s y=%s: %s", spec.id, nu, x, y, exc)
        return GridPoint(bound_id=spec.id, nu=nu, x=x, y=y, slack=math.nan, status="error")

    if not math.isfinite(slack):
        return GridPoint(bound_id=spec.id, nu=nu, x=x, y=y, slack=math.nan, status="error")
    if spec.is_equality(nu) and abs(slack) <= EQUALITY_SLACK:
        return GridPoint(bound_id=spec.id, nu=nu, x=x, y=y, slack=0.0, status="equality")
    status = "violation" if slack < -tolerance else "ok"
    return GridPoint(bound_id=spec.id, nu=nu, x=x, y=y, slack=slack, status=status)


def _points_for(spec, grid, nu_values):
    points = []
    for nu in nu_values:
        for x in grid.x_values:
            if spec.needs_y:
                points.extend((nu, x, y) for y in grid.y_values(x))
            else:
                points.append((nu, x, None))
    return points


def _run_points(spec, points, tolerance, check, workers):
    def evaluate(point):
        return _check_point(spec, *point, tolerance=tolerance, check=check)

    if workers <= 1:
        return [evaluate(p) for p in points]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        # map keeps submission order
        return list(executor.map(evaluate, points))


def _summarise(bound_id, results, tolerance, notes=None):
    report = GridReport(bound_id=bound_id, points=results, notes=list(notes or []))
    for point in results:
        if point.status == "error":
            report.errors += 1
            continue
        report.points_checked += 1
        report.worst_slack = min(report.worst_slack, point.slack)
        report.max_rel_gap = max(report.max_rel_gap, point.slack)
        if point.status == "violation":
            report.violations.append(point)
    if report.violations or report.errors:
        logger.warning(
            "%s: %d violations, %d errors, worst slack %.3e",
            bound_id, len(report.violations), report.errors, report.worst_slack,
        )
    else:
        logger.info("%s: %d points, worst slack %.3e", bound_id, report.points_checked, report.worst_slack)
    return report


def certify(bound_id, grid=None, tolerance=DEFAULT_TOLERANCE, workers=None):
    """Check one registered inequality at every in-range point of the grid."""
    spec = get_bound(bound_id)
    grid = grid or default_grid()
    workers = worker_count() if workers is None else workers
    nu_values = [nu for nu in grid.nu_values if spec.valid_for(nu)]
    notes = []
    if len(nu_values) < len(grid.nu_values):
        notes.append(f"{len(grid.nu_values) - len(nu_values)} orders outside the validity range skipped")
    results = _run_points(spec, _points_for(spec, grid, nu_values), tolerance, True, workers)
    return _summarise(bound_id, results, tolerance, notes)


def certify_all(grid=None, tolerance=DEFAULT_TOLERANCE, workers=None):
    grid = grid or default_grid()
    return [certify(bound_id, grid, tolerance, workers) for bound_id in REGISTRY]


def experimental_eq14_extension(grid=None, tolerance=DEFAULT_TOLERANCE, workers=None):
    """
    Check positivity of the product difference below its proven range,
    on orders in [-1/2, 1/2). The result is informational only.
    """
    spec = get_bound("eq14_positivity")
    grid = grid or default_grid()
    workers = worker_count() if workers is None else workers
    nu_values = [nu for nu in grid.nu_values if -0.5 <= nu < 0.5]
    results = _run_points(spec, _points_for(spec, grid, nu_values), tolerance, False, workers)
    return _summarise(
        "eq14_positivity[experimental]", results, tolerance,
        notes=["experimental: orders below the proven range; not counted as failures"],
    )


# ------------------------------------------------------------
# Property suites
# ------------------------------------------------------------
def _sequence_report(name, rows, tolerance=0.0):
    """rows: (nu, x, slack) with slack > 0 meaning the property holds strictly."""
    results = []
    for nu, x, slack in rows:
        status = "ok" if slack > -tolerance else "violation"
        results.append(GridPoint(bound_id=name, nu=nu, x=x, slack=slack, status=status))
    return _summarise(name, results, tolerance)


def _b_monotone_in_x(grid):
    xs = [x for x in grid.x_values if x >= 0.1]
    rows = []
    for nu in grid.nu_values:
        values = [b_kernel(nu, x) for x in xs]
        for x, here, after in zip(xs[1:], values, values[1:]):
            rows.append((nu, x, (here - after) / here))
    return _sequence_report("b_decreasing_in_x", rows)


def _b_monotone_in_nu(grid):
    nus = list(grid.nu_values)
    rows = []
    for x in grid.x_values:
        values = [b_kernel(nu, x) for nu in nus]
        for nu, here, after in zip(nus[1:], values, values[1:]):
            rows.append((nu, x, (after - here) / after))
    return _sequence_report("b_increasing_in_nu", rows)


def _ratio_monotone_in_nu(grid):
    nus = [nu for nu in grid.nu_values if nu > 0.5]
    rows = []
    for x in grid.x_values:
        values = [ratio_succ_exact("L", nu, x) for nu in nus]
        for nu, here, after in zip(nus[1:], values, values[1:]):
            rows.append((nu, x, (here - after) / here))
    return _sequence_report("ratio_decreasing_in_nu", rows)


def turan_gap(nu, x):
    """(L_nu^2 - L_{nu-1} L_{nu+1}) / L_nu^2, positive on nu > -3/2."""
    mid = struve_l(nu, x).value
    upper = struve_l(nu + 1.0, x).value
    if nu - 1.0 >= -1.5:
        lower = struve_l(nu - 1.0, x).value
    else:
        lower = upper + 2.0 * nu / x * mid + inhomogeneous_term(nu, x)
    return (mid * mid - lower * upper) / (mid * mid)


def _turan(grid):
    rows = [(nu, x, turan_gap(nu, x)) for nu in grid.nu_values for x in grid.x_values if nu > -1.5]
    return _sequence_report("turan", rows)


def _csch_reversal(grid):
    """
    b_nu(x) >= (x/2) csch x on [-1/2, 1/2) and <= below -1/2. Orders within
    0.01 of 1/2 are left out.
    """
    rows = []
    for nu in grid.nu_values:
        if nu <= -1.5 or nu > 0.49:
            continue
        for x in grid.x_values:
            b = b_kernel(nu, x)
            csch = half_x_csch(x)
            if abs(nu + 0.5) <= EQUALITY_TOL:
                rows.append((nu, x, 0.0 if abs(b - csch) <= EQUALITY_SLACK * csch else -abs(b - csch) / csch))
            elif nu < -0.5:
                rows.append((nu, x, (csch - b) / csch))
            else:
                rows.append((nu, x, (b - csch) / csch))
    return _sequence_report("csch_lower_reversal", rows, tolerance=DEFAULT_TOLERANCE)


def _recurrence_residuals(grid):
    rows = []
    for nu in grid.nu_values:
        if nu <= -0.5:
            continue
        for x in grid.x_values:
            rows.append((nu, x, RECURRENCE_TOL - max(recurrence_check(nu, x))))
    return _sequence_report("recurrence_residuals", rows)


def monotonicity_suite(grid=None, workers=None):
    grid = grid or default_grid()
    return [
        _b_monotone_in_x(grid),
        _b_monotone_in_nu(grid),
        _ratio_monotone_in_nu(grid),
        _turan(grid),
        certify("m_ratio_lower", grid, workers=workers),
        _csch_reversal(grid),
        _recurrence_residuals(grid),
    ]


def large_x_tightness(nu_values=(0.5, 1.0, 2.5, 5.0, 10.0), x_values=(200.0, 300.0, 400.0), threshold=1e-6):
    """The Bessel-ratio bracket on L_nu/L_{nu-1} closes up as x grows."""
    results = []
    for bound_id in ("eq17_lower", "eq17_upper"):
        spec = get_bound(bound_id)
        for nu in nu_values:
            for x in x_values:
                exact = exact_value(spec.target, nu, x)
                gap = abs(spec.evaluate(nu, x) / exact - 1.0)
                status = "ok" if gap <= threshold else "violation"
                results.append(GridPoint(bound_id=bound_id, nu=nu, x=x, slack=threshold - gap, status=status))
    return _summarise("large_x_tightness", results, 0.0, notes=[TIGHTNESS_NOTE])


# ------------------------------------------------------------
# Crossovers
# ------------------------------------------------------------
def crossover(bound_id_a, bound_id_b, nu, x_range=(1e-3, 50.0)):
    """x at which two bounds on the same target exchange order, to within 1e-4."""
    spec_a = get_bound(bound_id_a)
    spec_b = get_bound(bound_id_b)

    def difference(x):
        return spec_a.evaluate(nu, x) - spec_b.evaluate(nu, x)

    def scan_sign(x):
        a, b = spec_a.evaluate(nu, x), spec_b.evaluate(nu, x)
        # differences at rounding level count as ties, not sign changes
        if abs(a - b) <= ROUNDING_ULPS * np.finfo(float).eps * max(abs(a), abs(b)):
            return 0.0
        return float(np.sign(a - b))

    xs = np.geomspace(x_range[0], x_range[1], SCAN_POINTS)
    signs = np.array([scan_sign(float(x)) for x in xs])
    nonzero = np.flatnonzero(signs)
    changes = [i for i, j in zip(nonzero, nonzero[1:]) if signs[i] != signs[j]]
    if not changes:
        raise NoSignChange(f"{bound_id_a} - {bound_id_b} keeps one sign on {x_range} at nu={nu}")
    if len(changes) > 1:
        raise MultipleSignChanges(
            f"{bound_id_a} - {bound_id_b} changes sign {len(changes)} times on {x_range} at nu={nu}"
        )
    i = changes[0]
    j = nonzero[nonzero > i][0]
    root = optimize.bisect(difference, float(xs[i]), float(xs[j]), xtol=CROSSOVER_XTOL)
    logger.debug("crossover %s/%s at nu=%s: x=%.6f", bound_id_a, bound_id_b, nu, root)
    return root


def crossover_suite():
    """Recompute the published crossover points; one row per point."""
    rows = []
    for bound_a, bound_b, nu, published, tol in REFERENCE_CROSSOVERS:
        computed = crossover(bound_a, bound_b, nu)
        rows.append({
            "bound_a": bound_a, "bound_b": bound_b, "nu": nu,
            "computed": computed, "published": published, "tolerance": tol,
            "ok": abs(computed - published) <= tol,
        })
    published, tol = REFERENCE_A_NU_CROSSOVER
    computed = a_nu_crossover()
    rows.append({
        "bound_a": "a_nu", "bound_b": "eq46_constant", "nu": computed,
        "computed": computed, "published": published, "tolerance": tol,
        "ok": abs(computed - published) <= tol,
    })
    return pd.DataFrame(rows)


# ------------------------------------------------------------
# Relative-error tables
# ------------------------------------------------------------
_TABLE_BOUNDS = {
    1: ("eq17_lower", "succ_ratio_L", "zero"),
    2: ("eq17_upper", "succ_ratio_L", "limit_formula"),
    3: ("eq18_lower", "succ_ratio_L", "zero"),
    4: ("eq18_upper", "succ_ratio_L", "limit_formula"),
    5: ("eq39_upper", "pointwise_L", None),
    6: ("eq46_upper", "pointwise_L", None),
}

# relative error of the approximant as x -> 0
_ZERO_LIMITS = {
    2: lambda nu: math.inf if nu == 0.0 else 1.0 / (2.0 * nu),
    4: lambda nu: math.inf if nu == 0.5 else 2.0 / (2.0 * nu - 1.0),
}


def table_spec(table_id):
    reference = REFERENCE_TABLES[table_id]
    approximant_id, exact_id, rule = _TABLE_BOUNDS[table_id]
    return TableSpec(
        table_id=table_id,
        nu_rows=reference["nu_rows"],
        x_cols=reference["x_cols"],
        approximant_id=approximant_id,
        exact_id=exact_id,
        zero_column_rule=rule,
        caption=reference["caption"],
    )


TABLE_SPECS = {table_id: table_spec(table_id) for table_id in REFERENCE_TABLES}


def _zero_column_value(spec, nu):
    if spec.zero_column_rule == "zero":
        return 0.0
    if spec.zero_column_rule == "infinity":
        return math.inf
    return _ZERO_LIMITS[spec.table_id](nu)


def relative_error_table(spec):
    """|approximant / exact - 1| on the table's (nu, x) layout, as a DataFrame."""
    bound = get_bound(spec.approximant_id)
    matrix = []
    for nu in spec.nu_rows:
        row = []
        for x in spec.x_cols:
            if x == 0.0:
                row.append(_zero_column_value(spec, nu))
                continue
            # the published tables include rows just outside the proven range
            approx = bound.evaluate(nu, x, check=False)
            row.append(abs(approx / exact_value(spec.exact_id, nu, x) - 1.0))
        matrix.append(row)
    frame = pd.DataFrame(matrix, index=pd.Index(spec.nu_rows, name="nu"), columns=pd.Index(spec.x_cols, name="x"))
    return frame


def published_table(table_id, corrected=True):
    """The printed table; with corrected=True the cells in REFERENCE_CELL_CORRECTIONS are replaced."""
    reference = REFERENCE_TABLES[table_id]
    frame = pd.DataFrame(
        reference["values"],
        index=pd.Index(reference["nu_rows"], name="nu"),
        columns=pd.Index(reference["x_cols"], name="x"),
    )
    if corrected:
        for (table, nu, x), (_, reproduced) in REFERENCE_CELL_CORRECTIONS.items():
            if table == table_id:
                frame.loc[nu, x] = reproduced
    return frame


def published_deviation(table_id, computed=None):
    """Absolute difference from the printed table; NaN where both sides are infinite."""
    computed = relative_error_table(TABLE_SPECS[table_id]) if computed is None else computed
    published = published_table(table_id)
    both_inf = np.isinf(computed.values) & np.isinf(published.values)
    deviation = (computed - published).abs()
    return deviation.mask(both_inf)


# ------------------------------------------------------------
# Serialization
# ------------------------------------------------------------
REPORT_COLUMNS = ["bound_id", "nu", "x", "y", "slack", "status"]


def report_to_csv(reports):
    rows = [point.model_dump() for report in reports for point in report.points]
    frame = pd.DataFrame(rows, columns=REPORT_COLUMNS)
    return frame.to_csv(index=False, lineterminator="\n")


def _fmt(value):
    return "inf" if math.isinf(value) else f"{value:.4f}"


def table_to_text(frame, caption=""):
    header = "nu\\x".ljust(8) + "".join(f"{x:>10g}" for x in frame.columns)
    lines = [caption] if caption else []
    lines.append(header)
    for nu, row in frame.iterrows():
        lines.append(f"{nu:<8g}" + "".join(f"{_fmt(v):>10}" for v in row))
    return "\n".join(lines) + "\n"


def table_to_csv(frame):
    """Long format: nu,x,value,infinite. Infinite cells leave value empty."""
    rows = []
    for nu, row in frame.iterrows():
        for x, v in row.items():
            infinite = math.isinf(v)
            rows.append({"nu": nu, "x": x, "value": "" if infinite else f"{v:.4f}", "infinite": int(infinite)})
    return pd.DataFrame(rows, columns=["nu", "x", "value", "infinite"]).to_csv(index=False, lineterminator="\n")


def table_from_csv(text):
    long = pd.read_csv(io.StringIO(text))
    values = long["value"].astype(float).where(long["infinite"] == 0, math.inf)
    long = long.assign(value=values)
    frame = long.pivot(index="nu", columns="x", values="value")
    return frame.rename_axis(index="nu", columns="x")
