# struve_bounds/succ_ratio_bounds.py
"""
Bounds for the successive-order ratio h_nu(x) = L_nu(x) / L_{nu-1}(x).

Single-formula bounds raise DomainError outside their proven order range.
Bracket builders never raise for range failures; they clear the side's flag.
"""
import logging
import math

from struve_bounds.bfunc import b_kernel
from struve_bounds.errors import DomainError, InvalidBracket, NoValidBound
from struve_bounds.models import BesselBracket, BoundSpec, Bracket, FuncValue
from struve_bounds.special_core import (
    CANCELLATION_LIMIT,
    INTEGRAL_SWITCH,
    bessel_i,
    inhomogeneous_term,
    ratio_succ_exact,
    struve_l,
    struve_m,
)

logger = logging.getLogger(__name__)


def _require(condition, message):
    if not condition:
        raise DomainError(message)


# ------------------------------------------------------------
# Bessel ratio I_nu / I_{nu-1}
# ------------------------------------------------------------
def bessel_ratio_lower(nu, x):
    return x / (nu - 0.5 + math.sqrt((nu + 0.5) ** 2 + x * x))


def bessel_ratio_upper(nu, x):
    return x / (nu - 0.5 + math.sqrt((nu - 0.5) ** 2 + x * x))


def bessel_ratio_tanh_lower(nu, x):
    t = math.tanh(x)
    return x * t / (x + (2.0 * nu - 1.0) * t)


def bessel_ratio_bounds(nu, x):
    bracket = BesselBracket(lower_id="bessel_sqrt_lower", upper_id="bessel_sqrt_upper")
    if nu >= 0.0:
        bracket.lower = bessel_ratio_lower(nu, x)
        bracket.lower_valid = True
    if nu >= 0.5:
        bracket.upper = bessel_ratio_upper(nu, x)
        bracket.upper_valid = True
    if nu > 0.5:
        bracket.tanh_lower = bessel_ratio_tanh_lower(nu, x)
        bracket.tanh_lower_valid = True
    return bracket


# ------------------------------------------------------------
# Product difference I_nu L_{nu-1} - I_{nu-1} L_nu
# ------------------------------------------------------------
def _struve_m_accurate(mu, x, cfg=None):
    """M_mu(x) for mu >= -3/2; below -1/2 the order is raised with the Struve recurrence."""
    if mu >= -0.5:
        return struve_m(mu, x, cfg).value
    upper = struve_m(mu + 2.0, x, cfg).value
    mid = struve_m(mu + 1.0, x, cfg).value
    return upper + 2.0 * (mu + 1.0) / x * mid + inhomogeneous_term(mu + 1.0, x)


def product_difference(nu, x, cfg=None):
    """
    I_nu(x) L_{nu-1}(x) - I_{nu-1}(x) L_nu(x).

    Both products grow like e^(2x) while the difference grows like e^x, so
    past three lost digits the equivalent form I_nu M_{nu-1} - I_{nu-1} M_nu
    is used instead.
    """
    i_nu = bessel_i(nu, x, cfg).value
    i_prev = bessel_i(nu - 1.0, x, cfg).value
    l_nu = struve_l(nu, x, cfg).value
    l_prev = struve_l(nu - 1.0, x, cfg).value

    left = i_nu * l_prev
    right = i_prev * l_nu
    direct = left - right
    scale = max(abs(left), abs(right))
    ratio = abs(direct) / scale if scale > 0.0 else 1.0
    cancellation = ratio < CANCELLATION_LIMIT

    if ratio < INTEGRAL_SWITCH:
        value = i_nu * _struve_m_accurate(nu - 1.0, x, cfg) - i_prev * _struve_m_accurate(nu, x, cfg)
        est = 1e-10
    else:
        value = direct
        est = 4.0 * math.ulp(scale) / abs(direct) if direct != 0.0 else math.inf
    if cancellation:
        logger.info("product difference at nu=%s, x=%s taken from the M form", nu, x)
    return FuncValue(value=value, terms_used=0, est_rel_error=est, cancellation=cancellation)


def product_difference_positivity(nu, x):
    _require(nu >= 0.5, f"positivity of the product difference needs nu >= 1/2, got {nu}")
    return 0.0


def product_difference_cap_first(nu, x, cfg=None):
    _require(nu >= -0.5, f"first product-difference cap needs nu >= -1/2, got {nu}")
    return inhomogeneous_term(nu, x) * bessel_i(nu, x, cfg).value


def product_difference_cap_second(nu, x, cfg=None):
    _require(nu >= 1.5, f"second product-difference cap needs nu >= 3/2, got {nu}")
    return inhomogeneous_term(nu - 1.0, x) * bessel_i(nu - 1.0, x, cfg).value


def product_difference_bracket(nu, x, cfg=None):
    bracket = Bracket(lower_id="eq14_positivity")
    if nu >= 0.5:
        bracket.lower = 0.0
        bracket.lower_valid = True
    caps = []
    if nu >= -0.5:
        caps.append((product_difference_cap_first(nu, x, cfg), "eq15_upper"))
    if nu >= 1.5:
        caps.append((product_difference_cap_second(nu, x, cfg), "eq16_upper"))
    if caps:
        bracket.upper, bracket.upper_id = min(caps)
        bracket.upper_valid = True
    return bracket


def m_ratio_lower(nu, x, cfg=None):
    """I_nu / I_{nu-1}, which sits below M_nu / M_{nu-1} for nu >= 1/2."""
    _require(nu >= 0.5, f"M-ratio lower bound needs nu >= 1/2, got {nu}")
    return ratio_succ_exact("I", nu, x, cfg)


# ------------------------------------------------------------
# Ratio bounds for h_nu(x)
# ------------------------------------------------------------
def eq17_lower(nu, x, cfg=None):
    ratio_inv = bessel_i(nu - 1.0, x, cfg).value / bessel_i(nu, x, cfg).value
    return 1.0 / (ratio_inv + 2.0 * b_kernel(nu, x, cfg) / x)


def eq17_upper(nu, x, cfg=None):
    return ratio_succ_exact("I", nu, x, cfg)


def eq18_lower(nu, x, cfg=None):
    return x / (nu - 0.5 + 2.0 * b_kernel(nu, x, cfg) + math.sqrt((nu + 0.5) ** 2 + x * x))


def eq18_upper(nu, x, cfg=None):
    return bessel_ratio_upper(nu, x)


def eq18_simplified_lower(nu, x, cfg=None):
    """The segura-form lower bound with b_nu replaced by its ceiling 1/2."""
    _require(nu >= 0.0, f"simplified lower bound needs nu >= 0, got {nu}")
    return x / (nu + 0.5 + math.sqrt((nu + 0.5) ** 2 + x * x))


def ratio_bracket_via_bessel(nu, x, cfg=None):
    bracket = Bracket(lower_id="eq17_lower", upper_id="eq17_upper")
    if nu >= 0.0:
        bracket.lower = eq17_lower(nu, x, cfg)
        bracket.lower_valid = True
    if nu >= 0.5:
        bracket.upper = eq17_upper(nu, x, cfg)
        bracket.upper_valid = True
    return bracket


def ratio_bracket_segura_form(nu, x, cfg=None):
    bracket = Bracket(lower_id="eq18_lower", upper_id="eq18_upper")
    if nu >= 0.0:
        bracket.lower = eq18_lower(nu, x, cfg)
        bracket.lower_valid = True
    if nu >= 0.5:
        bracket.upper = eq18_upper(nu, x, cfg)
        bracket.upper_valid = True
    return bracket


def ratio_lower_tanh(nu, x, cfg=None):
    _require(nu > 0.5, f"tanh lower bound needs nu > 1/2, got {nu}")
    t = math.tanh(x)
    return x * t / (x + (2.0 * nu - 1.0) * t + 2.0 * b_kernel(nu, x, cfg) * t)


def ratio_upper_tanh_half(nu, x, cfg=None):
    _require(nu >= 0.5, f"tanh(x/2) upper bound needs nu >= 1/2, got {nu}")
    return math.tanh(0.5 * x)


def ratio_lower_turan(nu, x, cfg=None):
    _require(nu >= -0.5, f"Turan lower bound needs nu >= -1/2, got {nu}")
    shift = nu + b_kernel(nu, x, cfg)
    return x / (shift + math.sqrt(shift * shift + x * x))


def ratio_lower_tanh_half(nu, x, cfg=None):
    _require(nu >= 0.5, f"tanh(x/2) lower bound needs nu >= 1/2, got {nu}")
    t = math.tanh(0.5 * x)
    b_gap = b_kernel(nu, x, cfg) - b_kernel(0.5, x, cfg)
    return x * t / (x + (2.0 * nu - 1.0) * t + 2.0 * b_gap * t)


def ratio_upper_refined(nu, x, cfg=None):
    _require(nu >= 0.0, f"refined upper bound needs nu >= 0, got {nu}")
    b_here = b_kernel(nu, x, cfg)
    b_next = b_kernel(nu + 1.0, x, cfg)
    root = math.sqrt((nu + 1.0 + b_next) ** 2 + x * x)
    return x / (nu - 1.0 + 2.0 * b_here - b_next + root)


def ratio_refine_step(nu, x, next_bracket, cfg=None):
    """
    Map a bracket for h_{nu+1}(x) to one for h_nu(x) through
    h_nu = 1 / (2 nu / x + 2 b_nu(x) / x + h_{nu+1}).

    An upper bound on h_{nu+1} becomes a lower bound on h_nu and vice versa.
    """
    _require(nu >= 0.0, f"refinement step needs nu >= 0, got {nu}")
    if not next_bracket.is_ordered():
        raise InvalidBracket(
            f"lower {next_bracket.lower} exceeds upper {next_bracket.upper}"
        )
    base = (2.0 * nu + 2.0 * b_kernel(nu, x, cfg)) / x
    refined = Bracket()
    if next_bracket.upper_valid:
        refined.lower = 1.0 / (base + next_bracket.upper)
        refined.lower_valid = True
        refined.lower_id = f"refine({next_bracket.upper_id})"
    if next_bracket.lower_valid and base + next_bracket.lower > 0.0:
        refined.upper = 1.0 / (base + next_bracket.lower)
        refined.upper_valid = True
        refined.upper_id = f"refine({next_bracket.lower_id})"
    return refined


def h_asym(nu, x, regime):
    """Leading behaviour of h_nu(x) as x -> 0 ('small') or x -> infinity ('large')."""
    if regime == "small":
        _require(nu > -0.5, f"small-x form of h needs nu > -1/2, got {nu}")
        s = 2.0 * nu + 1.0
        return x / s - 2.0 * x ** 3 / (3.0 * s * s * (2.0 * nu + 3.0))
    if regime == "large":
        return 1.0 - (2.0 * nu - 1.0) / (2.0 * x) + (4.0 * nu * nu - 8.0 * nu + 3.0) / (8.0 * x * x)
    raise DomainError(f"regime must be 'small' or 'large', got {regime!r}")


# ------------------------------------------------------------
# Registry entries
# ------------------------------------------------------------
SUCC_RATIO_BOUNDS = [
    BoundSpec(id="eq14_positivity", target="product_diff", side="lower", nu_min=0.5,
              formula=product_difference_positivity,
              description="I_nu L_{nu-1} - I_{nu-1} L_nu > 0"),
    BoundSpec(id="eq15_upper", target="product_diff", side="upper", nu_min=-0.5,
              formula=product_difference_cap_first,
              description="product difference < a_nu(x) I_nu(x)"),
    BoundSpec(id="eq16_upper", target="product_diff", side="upper", nu_min=1.5,
              formula=product_difference_cap_second,
              description="product difference < a_{nu-1}(x) I_{nu-1}(x)"),
    BoundSpec(id="m_ratio_lower", target="succ_ratio_M", side="lower", nu_min=0.5,
              formula=m_ratio_lower,
              description="M_nu / M_{nu-1} > I_nu / I_{nu-1}"),
    BoundSpec(id="eq17_lower", target="succ_ratio_L", side="lower", nu_min=0.0,
              formula=eq17_lower,
              description="(I_{nu-1}/I_nu + 2 b_nu/x)^-1"),
    BoundSpec(id="eq17_upper", target="succ_ratio_L", side="upper", nu_min=0.5,
              formula=eq17_upper,
              description="I_nu / I_{nu-1}"),
    BoundSpec(id="eq18_lower", target="succ_ratio_L", side="lower", nu_min=0.0,
              formula=eq18_lower,
              description="x / (nu - 1/2 + 2 b_nu + sqrt((nu + 1/2)^2 + x^2))"),
    BoundSpec(id="eq18_upper", target="succ_ratio_L", side="upper", nu_min=0.5,
              formula=eq18_upper,
              description="x / (nu - 1/2 + sqrt((nu - 1/2)^2 + x^2))"),
    BoundSpec(id="eq18s_lower", target="succ_ratio_L", side="lower", nu_min=0.0,
              formula=eq18_simplified_lower,
              description="x / (nu + 1/2 + sqrt((nu + 1/2)^2 + x^2))"),
    BoundSpec(id="eq19_lower", target="succ_ratio_L", side="lower", nu_min=0.5,
              nu_min_inclusive=False, formula=ratio_lower_tanh,
              description="x tanh x / (x + (2 nu - 1 + 2 b_nu) tanh x)"),
    BoundSpec(id="eq20_upper", target="succ_ratio_L", side="upper", nu_min=0.5,
              equality_nu=0.5, formula=ratio_upper_tanh_half,
              description="tanh(x/2)"),
    BoundSpec(id="eq21_lower", target="succ_ratio_L", side="lower", nu_min=-0.5,
              formula=ratio_lower_turan,
              description="x / (nu + b_nu + sqrt((nu + b_nu)^2 + x^2))"),
    BoundSpec(id="eq22_lower", target="succ_ratio_L", side="lower", nu_min=0.5,
              equality_nu=0.5, formula=ratio_lower_tanh_half,
              description="tanh(x/2) form with b_nu - b_{1/2}"),
    BoundSpec(id="eq24_upper", target="succ_ratio_L", side="upper", nu_min=0.0,
              formula=ratio_upper_refined,
              description="one recurrence step applied to the Turan lower bound"),
]


def best_bracket(nu, x, cfg=None):
    """Tightest valid lower and upper bound on h_nu(x) among the registered ones."""
    bracket = Bracket()
    for spec in SUCC_RATIO_BOUNDS:
        if spec.target != "succ_ratio_L" or not spec.valid_for(nu):
            continue
        value = spec.formula(nu, x, cfg)
        if spec.side == "lower":
            if not bracket.lower_valid or value > bracket.lower:
                bracket.lower, bracket.lower_id = value, spec.id
                bracket.lower_equality = spec.is_equality(nu)
                bracket.lower_valid = True
        elif not bracket.upper_valid or value < bracket.upper:
            bracket.upper, bracket.upper_id = value, spec.id
            bracket.upper_equality = spec.is_equality(nu)
            bracket.upper_valid = True
    if not (bracket.lower_valid or bracket.upper_valid):
        raise NoValidBound(f"no registered bound on L_nu/L_(nu-1) applies at nu={nu}")
    return bracket
