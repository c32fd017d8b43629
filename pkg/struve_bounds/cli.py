# struve_bounds/cli.py
"""Command-line front end: `python app.py <subcommand> ...`."""
import logging
import math
import sys

import click
import pandas as pd

from struve_bounds import verify_engine
from struve_bounds.arg_ratio_bounds import arg_ratio_bessel_bracket, arg_ratio_exact, arg_ratio_explicit_bracket
from struve_bounds.condition_bounds import cond_exact
from struve_bounds.config import log_settings
from struve_bounds.errors import StruveError
from struve_bounds.logs_handler import configure_logging, log_error
from struve_bounds.models import ArgPair
from struve_bounds.registry import bound_ids, exact_value, get_bound
from struve_bounds.special_core import bessel_i, struve_l, struve_m
from struve_bounds.succ_ratio_bounds import best_bracket

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATIONS = 2

_EVALUATORS = {"I": bessel_i, "L": struve_l, "M": struve_m}


class FiniteFloat(click.ParamType):
    name = "real"

    def convert(self, value, param, ctx):
        if isinstance(value, float) and math.isfinite(value):
            return value
        try:
            number = float(value)
        except (TypeError, ValueError):
            self.fail(f"{value!r} is not a real number", param, ctx)
        if not math.isfinite(number):
            self.fail(f"{value!r} is not finite", param, ctx)
        return number


REAL = FiniteFloat()

format_option = click.option(
    "--format", "output_format", type=click.Choice(["text", "csv"]), default="text", show_default=True
)


def _num(value):
    return f"{value:.17g}"


def _emit_rows(rows, columns, output_format):
    """Print a list of dicts as aligned text or CSV."""
    frame = pd.DataFrame(rows, columns=columns)
    if output_format == "csv":
        click.echo(frame.to_csv(index=False, lineterminator="\n"), nl=False)
    else:
        click.echo(frame.to_string(index=False))


def _bracket_rows(bracket, quantity):
    rows = []
    for side in ("lower", "upper"):
        if not getattr(bracket, f"{side}_valid"):
            continue
        rows.append({
            "quantity": quantity,
            "side": side,
            "bound_id": getattr(bracket, f"{side}_id"),
            "value": _num(getattr(bracket, side)),
            "equality": "equality" if getattr(bracket, f"{side}_equality") else "",
        })
    return rows


BRACKET_COLUMNS = ["quantity", "side", "bound_id", "value", "equality"]


# ------------------------------------------------------------
# Command group
# ------------------------------------------------------------
@click.group(name="struve-bounds")
@click.option("--log-level", default=None, help="Overrides STRUVE_LOG_LEVEL.")
def main(log_level):
    """Certified bounds for the modified Struve function L_nu."""
    env_level, log_file = log_settings()
    configure_logging(log_level or env_level, log_file)


@main.command("eval")
@click.option("--kind", type=click.Choice(["I", "L", "M"]), required=True)
@click.option("--nu", type=REAL, required=True)
@click.option("--x", type=REAL, required=True)
@format_option
def eval_command(kind, nu, x, output_format):
    """Evaluate I_nu(x), L_nu(x) or M_nu(x)."""
    result = _EVALUATORS[kind](nu, x)
    row = {
        "kind": kind, "nu": nu, "x": x, "value": _num(result.value),
        "terms_used": result.terms_used, "est_rel_error": f"{result.est_rel_error:.3e}",
        "cancellation": result.cancellation,
    }
    _emit_rows([row], list(row), output_format)
    return EXIT_OK


@main.command("bracket")
@click.option("--nu", type=REAL, required=True)
@click.option("--x", type=REAL, required=True)
@click.option("--y", type=REAL, default=None, help="Second argument for argument-ratio bounds.")
@click.option("--bound", "bound_id", default=None, help="Evaluate one registered bound instead.")
@format_option
def bracket_command(nu, x, y, bound_id, output_format):
    """Tightest registered bracket on L_nu(x)/L_{nu-1}(x), or one bound by id."""
    if bound_id is None:
        rows = _bracket_rows(best_bracket(nu, x), "succ_ratio_L")
        rows.append({"quantity": "succ_ratio_L", "side": "exact", "bound_id": "",
                     "value": _num(exact_value("succ_ratio_L", nu, x)), "equality": ""})
    else:
        spec = get_bound(bound_id)
        rows = [{
            "quantity": spec.target,
            "side": spec.side,
            "bound_id": spec.id,
            "value": _num(spec.evaluate(nu, x, y)),
            "equality": "equality" if spec.is_equality(nu) else "",
        }]
    _emit_rows(rows, BRACKET_COLUMNS, output_format)
    return EXIT_OK


@main.command("cond")
@click.option("--nu", type=REAL, required=True)
@click.option("--x", type=REAL, required=True)
@format_option
def cond_command(nu, x, output_format):
    """Condition number x L_nu'(x) / L_nu(x) and every bound valid at nu."""
    rows = [{"quantity": "cond_L", "side": "exact", "bound_id": "",
             "value": _num(cond_exact("L", nu, x).value), "equality": ""}]
    for bound_id in bound_ids("cond_L"):
        spec = get_bound(bound_id)
        if not spec.valid_for(nu):
            continue
        rows.append({
            "quantity": "cond_L", "side": spec.side, "bound_id": spec.id,
            "value": _num(spec.evaluate(nu, x)),
            "equality": "equality" if spec.is_equality(nu) else "",
        })
    _emit_rows(rows, BRACKET_COLUMNS, output_format)
    return EXIT_OK


@main.command("argratio")
@click.option("--nu", type=REAL, required=True)
@click.option("--x", type=REAL, required=True)
@click.option("--y", type=REAL, required=True)
@format_option
def argratio_command(nu, x, y, output_format):
    """L_nu(x) / L_nu(y) for x <= y with its Bessel-based and explicit brackets."""
    pair = ArgPair(x=x, y=y)
    rows = [{"quantity": "arg_ratio_L", "side": "exact", "bound_id": "",
             "value": _num(arg_ratio_exact(nu, pair)), "equality": ""}]
    rows += _bracket_rows(arg_ratio_bessel_bracket(nu, pair), "arg_ratio_L")
    if nu >= -0.5:
        rows += _bracket_rows(arg_ratio_explicit_bracket(nu, pair), "arg_ratio_L")
    _emit_rows(rows, BRACKET_COLUMNS, output_format)
    return EXIT_OK


@main.command("table")
@click.option("--id", "table_id", type=click.IntRange(1, 6), required=True)
@format_option
def table_command(table_id, output_format):
    """Relative-error table on the published (nu, x) layout."""
    spec = verify_engine.TABLE_SPECS[table_id]
    frame = verify_engine.relative_error_table(spec)
    if output_format == "csv":
        click.echo(verify_engine.table_to_csv(frame), nl=False)
    else:
        click.echo(verify_engine.table_to_text(frame, f"Table {table_id}: {spec.caption}"), nl=False)
    return EXIT_OK


@main.command("verify")
@click.option("--all", "run_all", is_flag=True, help="Every registered bound plus the property suites.")
@click.option("--bound", "bound_id", default=None)
@click.option("--experimental-eq14-extension", "experimental", is_flag=True,
              help="Also check product-difference positivity on [-1/2, 1/2).")
@click.option("--tolerance", type=REAL, default=verify_engine.DEFAULT_TOLERANCE, show_default=True)
@format_option
def verify_command(run_all, bound_id, experimental, tolerance, output_format):
    """Certify bounds on the default grid; exit code 2 on any violation."""
    if run_all == (bound_id is not None):
        raise click.UsageError("pass exactly one of --all or --bound")

    if run_all:
        reports = verify_engine.certify_all(tolerance=tolerance)
        reports += verify_engine.monotonicity_suite()
        reports.append(verify_engine.large_x_tightness())
    else:
        reports = [verify_engine.certify(bound_id, tolerance=tolerance)]

    extensions = [verify_engine.experimental_eq14_extension(tolerance=tolerance)] if experimental else []

    if output_format == "csv":
        click.echo(verify_engine.report_to_csv(reports + extensions), nl=False)
    else:
        for report in reports + extensions:
            verdict = "PASS" if report.passed else "FAIL"
            click.echo(
                f"{report.bound_id:<34} {verdict}  points={report.points_checked} "
                f"violations={len(report.violations)} errors={report.errors} "
                f"worst_slack={report.worst_slack:.3e}"
            )
            for note in report.notes:
                click.echo(f"    note: {note}")

    failed = [r.bound_id for r in reports if not r.passed]
    if failed:
        log_error("violations in: %s", ", ".join(failed))
        return EXIT_VIOLATIONS
    return EXIT_OK


@main.command("crossover")
@click.option("--a", "bound_a", required=True)
@click.option("--b", "bound_b", required=True)
@click.option("--nu", type=REAL, required=True)
@click.option("--xmin", type=REAL, default=1e-3, show_default=True)
@click.option("--xmax", type=REAL, default=50.0, show_default=True)
@format_option
def crossover_command(bound_a, bound_b, nu, xmin, xmax, output_format):
    """Argument at which two bounds exchange order."""
    if not 0.0 < xmin < xmax:
        raise click.UsageError("need 0 < xmin < xmax")
    root = verify_engine.crossover(bound_a, bound_b, nu, (xmin, xmax))
    row = {"bound_a": bound_a, "bound_b": bound_b, "nu": nu, "x_star": f"{root:.6f}"}
    _emit_rows([row], list(row), output_format)
    return EXIT_OK


# ------------------------------------------------------------
# Entry point
# ------------------------------------------------------------
def run(argv=None):
    """Run the CLI and return its exit code instead of exiting."""
    try:
        result = main.main(args=argv, prog_name="struve-bounds", standalone_mode=False)
    except click.ClickException as exc:
        click.echo(f"Error: {exc.format_message()}", err=True)
        return EXIT_ERROR
    except click.Abort:
        click.echo("Aborted.", err=True)
        return EXIT_ERROR
    except StruveError as exc:
        log_error("%s", exc)
        click.echo(f"Error: {exc}", err=True)
        return EXIT_ERROR
    except ValueError as exc:
        # pydantic validation of user-supplied arguments
        click.echo(f"Error: {exc}", err=True)
        return EXIT_ERROR
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
