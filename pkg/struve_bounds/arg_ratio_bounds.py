# struve_bounds/arg_ratio_bounds.py
"""
Bounds on the argument ratio L_nu(x) / L_nu(y), 0 < x < y, and pointwise
bounds on L_nu(x).

Products of large exponentials and small powers are assembled as a sum of
logarithms and exponentiated once.
"""
import logging
import math

from scipy import optimize, special

from struve_bounds.errors import DomainError
from struve_bounds.models import ANuConstant, ArgPair, BoundSpec, Bracket
from struve_bounds.special_core import bessel_i, struve_l

logger = logging.getLogger(__name__)

LOG_SQRT_PI = 0.5 * math.log(math.pi)
LOG_2 = math.log(2.0)
A_NU_XTOL = 1e-4


def _require(condition, message):
    if not condition:
        raise DomainError(message)


def _ordered(x, y):
    _require(x > 0.0 and y > 0.0, f"arguments must be positive, got x={x}, y={y}")
    _require(x <= y, f"argument ratio needs x <= y, got x={x}, y={y}")


def _quadratic_factor_log(nu, x, y):
    """log sqrt((3(2 nu + 3) + y^2) / (3(2 nu + 3) + x^2))"""
    k = 3.0 * (2.0 * nu + 3.0)
    return 0.5 * (math.log(k + y * y) - math.log(k + x * x))


def _log_half_sinh_sq(t):
    """log(cosh(t) - 1) = log(2 sinh(t/2)^2)"""
    half = 0.5 * t
    if half > 20.0:
        return 2.0 * (half - LOG_2) + LOG_2 + math.log1p(-math.exp(-2.0 * half)) * 2.0
    return LOG_2 + 2.0 * math.log(math.sinh(half))


# ------------------------------------------------------------
# Exact target
# ------------------------------------------------------------
def arg_ratio_exact(nu, pair, cfg=None):
    _ordered(pair.x, pair.y)
    if pair.coincident:
        return 1.0
    return struve_l(nu, pair.x, cfg).value / struve_l(nu, pair.y, cfg).value


# ------------------------------------------------------------
# Argument ratio bounds
# ------------------------------------------------------------
def eq37_lower(nu, x, y, cfg=None):
    _require(nu >= -0.5, f"Bessel-ratio lower bound needs nu >= -1/2, got {nu}")
    _ordered(x, y)
    log_value = math.log(x / y) + _quadratic_factor_log(nu, x, y)
    return math.exp(log_value) * bessel_i(nu, x, cfg).value / bessel_i(nu, y, cfg).value


def eq37_upper(nu, x, y, cfg=None):
    _require(nu >= 0.5, f"Bessel-ratio upper bound needs nu >= 1/2, got {nu}")
    _ordered(x, y)
    return bessel_i(nu, x, cfg).value / bessel_i(nu, y, cfg).value


def eq38_lower(nu, x, y, cfg=None):
    _require(nu >= -0.5, f"explicit lower bound needs nu >= -1/2, got {nu}")
    _ordered(x, y)
    c = nu + 0.5
    sx = math.hypot(c, x)
    sy = math.hypot(c, y)
    log_value = (
        (sx - sy)
        + (nu + 1.0) * math.log(x / y)
        + _quadratic_factor_log(nu, x, y)
        + c * (math.log(c + sy) - math.log(c + sx))
    )
    return math.exp(log_value)


def eq38_upper(nu, x, y, cfg=None):
    _require(nu >= -0.5, f"explicit upper bound needs nu >= -1/2, got {nu}")
    _ordered(x, y)
    d = nu + 1.5
    tx = math.hypot(d, x)
    ty = math.hypot(d, y)
    log_value = (
        (tx - ty)
        + math.log(math.tanh(0.5 * x)) - math.log(math.tanh(0.5 * y))
        + nu * math.log(x / y)
        + d * (math.log(d + ty) - math.log(d + tx))
    )
    return math.exp(log_value)


def eq33a_upper(nu, x, y, cfg=None):
    _require(nu > -1.5, f"power upper bound needs nu > -3/2, got {nu}")
    _ordered(x, y)
    return math.exp((nu + 1.0) * math.log(x / y))


def eq33b_upper(nu, x, y, cfg=None):
    _require(nu >= 0.5, f"exponential upper bound needs nu >= 1/2, got {nu}")
    _ordered(x, y)
    return math.exp(x - y + nu * math.log(y / x))


def eq34_upper(nu, x, y, cfg=None):
    _require(nu >= 0.5, f"cosh upper bound needs nu >= 1/2, got {nu}")
    _ordered(x, y)
    return math.exp(_log_half_sinh_sq(x) - _log_half_sinh_sq(y) + nu * math.log(y / x))


def eq40_lower(nu, x, y, cfg=None):
    _require(nu > -0.5, f"cosh lower bound needs nu > -1/2, got {nu}")
    _ordered(x, y)
    log_cosh_ratio = (x - y) + math.log1p(math.exp(-2.0 * x)) - math.log1p(math.exp(-2.0 * y))
    return math.exp(log_cosh_ratio + (nu + 1.0) * math.log(x / y) + _quadratic_factor_log(nu, x, y))


def eq42_lower(nu, x, y, cfg=None):
    _require(nu >= 0.0, f"exponential lower bound needs nu >= 0, got {nu}")
    _ordered(x, y)
    log_value = (
        (x - y)
        + special.xlogy(nu, (y + nu) / (x + nu))
        + (nu + 1.0) * math.log(x / y)
        + _quadratic_factor_log(nu, x, y)
    )
    return math.exp(log_value)


_PRIOR_VARIANTS = {
    "eq33a": eq33a_upper,
    "eq33b": eq33b_upper,
    "eq34": eq34_upper,
    "hbv_combined": eq40_lower,
    "eq42": eq42_lower,
}


def arg_ratio_prior_bounds(nu, pair, variant, cfg=None):
    formula = _PRIOR_VARIANTS.get(variant)
    if formula is None:
        raise DomainError(f"unknown argument-ratio variant {variant!r}")
    return formula(nu, pair.x, pair.y, cfg)


def _unit_bracket(lower_id, upper_id):
    return Bracket(lower=1.0, upper=1.0, lower_valid=True, upper_valid=True,
                   lower_id=lower_id, upper_id=upper_id)


def arg_ratio_bessel_bracket(nu, pair, cfg=None):
    _ordered(pair.x, pair.y)
    if pair.coincident:
        return _unit_bracket("eq37_lower", "eq37_upper")
    bracket = Bracket(lower_id="eq37_lower", upper_id="eq37_upper")
    if nu >= -0.5:
        bracket.lower, bracket.lower_valid = eq37_lower(nu, pair.x, pair.y, cfg), True
    if nu >= 0.5:
        bracket.upper, bracket.upper_valid = eq37_upper(nu, pair.x, pair.y, cfg), True
    return bracket


def arg_ratio_explicit_bracket(nu, pair, cfg=None):
    _require(nu >= -0.5, f"explicit bracket needs nu >= -1/2, got {nu}")
    _ordered(pair.x, pair.y)
    if pair.coincident:
        return _unit_bracket("eq38_lower", "eq38_upper")
    return Bracket(
        lower=eq38_lower(nu, pair.x, pair.y), upper=eq38_upper(nu, pair.x, pair.y),
        lower_valid=True, upper_valid=True, lower_id="eq38_lower", upper_id="eq38_upper",
    )


# ------------------------------------------------------------
# Pointwise bounds on L_nu(x)
# ------------------------------------------------------------
def _log_eq39_upper(nu, x):
    c = nu + 0.5
    k = 3.0 * (2.0 * nu + 3.0)
    sx = math.hypot(c, x)
    return (
        (sx - c)
        - LOG_SQRT_PI - nu * LOG_2 - float(special.gammaln(nu + 1.5))
        + (nu + 1.0) * math.log(x)
        + 0.5 * (math.log(k) - math.log(k + x * x))
        + special.xlogy(c, (2.0 * nu + 1.0) / (c + sx))
    )


def eq39_lower(nu, x, cfg=None):
    _require(nu >= -0.5, f"pointwise lower bound needs nu >= -1/2, got {nu}")
    d = nu + 1.5
    tx = math.hypot(d, x)
    log_value = (
        (tx - d)
        - LOG_SQRT_PI - (nu - 1.0) * LOG_2 - float(special.gammaln(d))
        + nu * math.log(x)
        + math.log(math.tanh(0.5 * x))
        + d * (math.log(2.0 * nu + 3.0) - math.log(d + tx))
    )
    return math.exp(log_value)


def eq39_upper(nu, x, cfg=None):
    _require(nu >= -0.5, f"pointwise upper bound needs nu >= -1/2, got {nu}")
    return math.exp(_log_eq39_upper(nu, x))


def pointwise_upper_scaled(nu, x):
    """The pointwise upper bound times sqrt(x) e^(-x); tends to a_nu as x grows."""
    _require(nu >= -0.5, f"pointwise upper bound needs nu >= -1/2, got {nu}")
    return math.exp(_log_eq39_upper(nu, x) + 0.5 * math.log(x) - x)


def pointwise_bracket(nu, x, cfg=None):
    _require(nu >= -0.5, f"pointwise bracket needs nu >= -1/2, got {nu}")
    return Bracket(
        lower=eq39_lower(nu, x), upper=eq39_upper(nu, x),
        lower_valid=True, upper_valid=True, lower_id="eq39_lower", upper_id="eq39_upper",
    )


def eq43_upper(nu, x, cfg=None):
    _require(nu >= 0.0, f"elementary upper bound needs nu >= 0, got {nu}")
    k = 3.0 * (2.0 * nu + 3.0)
    log_value = (
        -LOG_SQRT_PI - nu * LOG_2 - float(special.gammaln(nu + 1.5))
        + special.xlogy(nu, nu / (x + nu))
        + 0.5 * (math.log(k) - math.log(k + x * x))
        + (nu + 1.0) * math.log(x) + x
    )
    return math.exp(log_value)


def eq45_upper(nu, x, cfg=None):
    _require(nu > -0.5, f"Bessel upper bound needs nu > -1/2, got {nu}")
    log_factor = LOG_2 + float(special.gammaln(nu + 2.0)) - LOG_SQRT_PI - float(special.gammaln(nu + 1.5))
    return math.exp(log_factor) * bessel_i(nu + 1.0, x, cfg).value


def eq46_constant(nu):
    """sqrt(2) Gamma(nu + 2) / (pi Gamma(nu + 3/2)), the large-x constant of the Bessel-based bound."""
    _require(nu > -0.5, f"constant needs nu > -1/2, got {nu}")
    return math.exp(0.5 * LOG_2 + float(special.gammaln(nu + 2.0)) - math.log(math.pi) - float(special.gammaln(nu + 1.5)))


def eq46_upper(nu, x, cfg=None):
    _require(nu > -0.5, f"Bessel-based elementary upper bound needs nu > -1/2, got {nu}")
    r = math.hypot(x, nu + 1.0)
    log_value = (
        math.log(eq46_constant(nu))
        + r + 2.0 / r
        - 0.5 * math.log(r)
        + (nu + 1.0) * (math.log(x) - math.log(nu + 1.0 + r))
    )
    return math.exp(log_value)


_POINTWISE_VARIANTS = {"eq43": eq43_upper, "eq45": eq45_upper, "eq46": eq46_upper}


def pointwise_prior_upper(nu, x, variant, cfg=None):
    formula = _POINTWISE_VARIANTS.get(variant)
    if formula is None:
        raise DomainError(f"unknown pointwise variant {variant!r}")
    return formula(nu, x, cfg)


# ------------------------------------------------------------
# The large-x constant a_nu
# ------------------------------------------------------------
def _log_a_nu(nu):
    c = nu + 0.5
    return (
        0.5 * (math.log(12.0) - math.log(math.pi))
        + 0.5 * math.log(nu + 1.5)
        - float(special.gammaln(nu + 1.5))
        + c * math.log(c) - c
    )


def a_nu_constant(nu):
    _require(nu > -0.5, f"a_nu needs nu > -1/2, got {nu}")
    upper = math.sqrt(6.0) / math.pi * math.sqrt((2.0 * nu + 3.0) / (2.0 * nu + 1.0))
    lower = upper * math.exp(-1.0 / (6.0 * (2.0 * nu + 1.0)))
    return ANuConstant(nu=nu, value=math.exp(_log_a_nu(nu)), stirling_lower=lower, stirling_upper=upper)


def a_nu_crossover(nu_range=(0.0, 10.0)):
    """Order at which a_nu equals the constant of the Bessel-based bound."""
    root = optimize.bisect(
        lambda nu: _log_a_nu(nu) - math.log(eq46_constant(nu)), *nu_range, xtol=A_NU_XTOL
    )
    logger.info("a_nu crossover at nu=%.4f", root)
    return root


ARG_RATIO_BOUNDS = [
    BoundSpec(id="eq33a_upper", target="arg_ratio_L", side="upper", nu_min=-1.5, nu_min_inclusive=False,
              formula=eq33a_upper, description="(x/y)^(nu+1)"),
    BoundSpec(id="eq33b_upper", target="arg_ratio_L", side="upper", nu_min=0.5,
              formula=eq33b_upper, description="e^(x-y) (y/x)^nu"),
    BoundSpec(id="eq34_upper", target="arg_ratio_L", side="upper", nu_min=0.5, equality_nu=0.5,
              formula=eq34_upper, description="(cosh x - 1)/(cosh y - 1) (y/x)^nu"),
    BoundSpec(id="eq37_lower", target="arg_ratio_L", side="lower", nu_min=-0.5,
              formula=eq37_lower, description="(x/y) sqrt(...) I_nu(x)/I_nu(y)"),
    BoundSpec(id="eq37_upper", target="arg_ratio_L", side="upper", nu_min=0.5,
              formula=eq37_upper, description="I_nu(x)/I_nu(y)"),
    BoundSpec(id="eq38_lower", target="arg_ratio_L", side="lower", nu_min=-0.5,
              formula=eq38_lower, description="explicit lower bound with (nu + 1/2) radicals"),
    BoundSpec(id="eq38_upper", target="arg_ratio_L", side="upper", nu_min=-0.5,
              formula=eq38_upper, description="explicit upper bound with (nu + 3/2) radicals"),
    BoundSpec(id="eq40_lower", target="arg_ratio_L", side="lower", nu_min=-0.5, nu_min_inclusive=False,
              formula=eq40_lower, description="cosh x / cosh y (x/y)^(nu+1) sqrt(...)"),
    BoundSpec(id="eq42_lower", target="arg_ratio_L", side="lower", nu_min=0.0,
              formula=eq42_lower, description="e^(x-y) ((y+nu)/(x+nu))^nu (x/y)^(nu+1) sqrt(...)"),
    BoundSpec(id="eq39_lower", target="pointwise_L", side="lower", nu_min=-0.5,
              formula=eq39_lower, description="pointwise lower bound"),
    BoundSpec(id="eq39_upper", target="pointwise_L", side="upper", nu_min=-0.5,
              formula=eq39_upper, description="pointwise upper bound"),
    BoundSpec(id="eq43_upper", target="pointwise_L", side="upper", nu_min=0.0,
              formula=eq43_upper, description="(nu/(x+nu))^nu sqrt(...) x^(nu+1) e^x / ..."),
    BoundSpec(id="eq45_upper", target="pointwise_L", side="upper", nu_min=-0.5, nu_min_inclusive=False,
              formula=eq45_upper, description="2 Gamma(nu+2) I_{nu+1}(x) / (sqrt(pi) Gamma(nu+3/2))"),
    BoundSpec(id="eq46_upper", target="pointwise_L", side="upper", nu_min=-0.5, nu_min_inclusive=False,
              formula=eq46_upper, description="elementary bound derived from the Bessel-based one"),
]
