# struve_bounds/bfunc.py
"""
The kernel b_nu(x) = (x/2)^(nu+1) / (sqrt(pi) Gamma(nu + 3/2) L_nu(x)).

It lies in (0, 1/2), decreases in x, increases in nu, and carries every
Struve-versus-Bessel correction in the ratio bounds.
"""
import logging
import math

from scipy import special

from struve_bounds.errors import DomainError
from struve_bounds.models import EQUALITY_TOL, BoundSpec, BValue, Bracket
from struve_bounds.special_core import SQRT_PI, struve_l

logger = logging.getLogger(__name__)

# exp() stays well inside the double range between these
_LOG_SAFE = 700.0


def _require_above(nu, floor, name, inclusive=False):
    ok = nu >= floor if inclusive else nu > floor
    if not ok:
        op = ">=" if inclusive else ">"
        raise DomainError(f"{name} needs nu {op} {floor}, got {nu}")


def b_kernel(nu, x, cfg=None):
    """b_nu(x) as a plain float."""
    _require_above(nu, -1.5, "b_nu(x)")
    struve = struve_l(nu, x, cfg).value
    log_numerator = (nu + 1.0) * math.log(0.5 * x) - math.log(SQRT_PI) - float(special.gammaln(nu + 1.5))
    if abs(log_numerator) < _LOG_SAFE:
        value = math.exp(log_numerator) / struve
        if value > 0.0 and math.isfinite(value):
            return value
    logger.debug("b_%s(%s) evaluated in log space", nu, x)
    return math.exp(log_numerator - math.log(struve))


def b_eval(nu, x, cfg=None):
    return BValue(value=b_kernel(nu, x, cfg), nu=nu, x=x)


def b_upper_quadratic(nu, x):
    _require_above(nu, -1.5, "b_upper_quadratic")
    return 0.5 / (1.0 + x * x / (3.0 * (2.0 * nu + 3.0)))


def half_x_csch(x):
    """(x/2) csch(x), stable for large x."""
    return x * math.exp(-x) / -math.expm1(-2.0 * x)


def b_csch_lower(nu, x):
    _require_above(nu, -0.5, "csch lower bound", inclusive=True)
    return half_x_csch(x)


def b_csch_upper(nu, x):
    _require_above(nu, -1.0, "csch upper bound")
    u = x / (2.0 * nu + 3.0)
    return 0.5 * x * math.exp(-u) / -math.expm1(-2.0 * u)


def b_csch_bracket(nu, x):
    bracket = Bracket(lower_id="eq13_lower", upper_id="eq13_upper")
    if nu >= -0.5:
        bracket.lower = b_csch_lower(nu, x)
        bracket.lower_valid = True
        bracket.lower_equality = abs(nu + 0.5) <= EQUALITY_TOL
    if nu > -1.0:
        bracket.upper = b_csch_upper(nu, x)
        bracket.upper_valid = True
    return bracket


def b_asym(nu, x, regime):
    _require_above(nu, -1.5, "b_asym")
    if regime == "small":
        return 0.5 - x * x / (6.0 * (2.0 * nu + 3.0))
    if regime == "large":
        log_value = (nu + 1.5) * math.log(x) - x - (nu + 0.5) * math.log(2.0) - float(special.gammaln(nu + 1.5))
        return math.exp(log_value)
    raise DomainError(f"regime must be 'small' or 'large', got {regime!r}")


B_KERNEL_BOUNDS = [
    BoundSpec(id="eq12_upper", target="b_kernel", side="upper", nu_min=-1.5, nu_min_inclusive=False,
              formula=b_upper_quadratic, description="(1/2) / (1 + x^2 / (3 (2 nu + 3)))"),
    BoundSpec(id="eq13_lower", target="b_kernel", side="lower", nu_min=-0.5, equality_nu=-0.5,
              formula=b_csch_lower, description="(x/2) csch(x)"),
    BoundSpec(id="eq13_upper", target="b_kernel", side="upper", nu_min=-1.0, nu_min_inclusive=False,
              formula=b_csch_upper, description="(x/4) csch(x / (2 nu + 3))"),
]
