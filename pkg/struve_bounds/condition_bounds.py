# struve_bounds/condition_bounds.py
"""Condition numbers C(f)(x) = x f'(x) / f(x) for L_nu and I_nu, and their brackets."""
import math

from struve_bounds.bfunc import b_kernel
from struve_bounds.errors import DomainError
from struve_bounds.models import EQUALITY_TOL, BoundSpec, Bracket, CondValue
from struve_bounds.special_core import bessel_i, struve_l


def cond_exact(kind, nu, x, cfg=None):
    """
    C(L_nu)(x) = x L_{nu-1}/L_nu - nu, switching to x L_{nu+1}/L_nu + nu + 2 b_nu
    when L_{nu-1} falls below the series domain. C(I_nu)(x) = x I_{nu+1}/I_nu + nu.
    """
    if kind == "L":
        if nu - 1.0 >= -1.5:
            value = x * struve_l(nu - 1.0, x, cfg).value / struve_l(nu, x, cfg).value - nu
        else:
            value = cond_l_from_next(nu, x, cfg)
    elif kind == "I":
        value = x * bessel_i(nu + 1.0, x, cfg).value / bessel_i(nu, x, cfg).value + nu
    else:
        raise DomainError(f"condition numbers are defined for L and I, got {kind!r}")
    return CondValue(value=value, kind=kind, nu=nu, x=x)


def cond_l_from_next(nu, x, cfg=None):
    """Second defining relation for C(L_nu); used as a residual check and below nu = -1/2."""
    return x * struve_l(nu + 1.0, x, cfg).value / struve_l(nu, x, cfg).value + nu + 2.0 * b_kernel(nu, x, cfg)


def _cond_i(nu, x, cfg=None):
    return cond_exact("I", nu, x, cfg).value


def _require(condition, message):
    if not condition:
        raise DomainError(message)


# ------------------------------------------------------------
# One-sided formulas
# ------------------------------------------------------------
def cond_upper_apti(nu, x, cfg=None):
    _require(nu > -1.5, f"sqrt upper bound needs nu > -3/2, got {nu}")
    return math.sqrt(x * x + nu * nu + 2.0 * (2.0 * nu + 1.0) * b_kernel(nu, x, cfg))


def cond_lower_via_bessel(nu, x, cfg=None):
    _require(nu >= 0.5, f"C(I) lower bound needs nu >= 1/2, got {nu}")
    return _cond_i(nu, x, cfg)


def cond_upper_via_bessel(nu, x, cfg=None):
    _require(nu >= -0.5, f"C(I) + 2b upper bound needs nu >= -1/2, got {nu}")
    return _cond_i(nu, x, cfg) + 2.0 * b_kernel(nu, x, cfg)


def cond_lower_eq29(nu, x, cfg=None):
    _require(nu >= 0.5, f"lower bound needs nu >= 1/2, got {nu}")
    return math.sqrt((nu - 0.5) ** 2 + x * x) - 0.5


def cond_upper_eq29(nu, x, cfg=None):
    _require(nu >= -0.5, f"upper bound needs nu >= -1/2, got {nu}")
    b = b_kernel(nu, x, cfg)
    return math.sqrt((nu + b) ** 2 + x * x) + b


def cond_lower_eq30(nu, x, cfg=None):
    _require(nu >= -1.0, f"lower bound needs nu >= -1, got {nu}")
    b_next = b_kernel(nu + 1.0, x, cfg)
    return math.sqrt((nu + 1.0 + b_next) ** 2 + x * x) + 2.0 * b_kernel(nu, x, cfg) - b_next - 1.0


def cond_upper_eq30(nu, x, cfg=None):
    _require(nu >= -0.5, f"upper bound needs nu >= -1/2, got {nu}")
    return math.sqrt((nu + 0.5) ** 2 + x * x) + 2.0 * b_kernel(nu, x, cfg) - 0.5


def cond_lower_eq31(nu, x, cfg=None):
    _require(nu >= -1.0, f"lower bound needs nu >= -1, got {nu}")
    denominator = nu + 0.5 + 2.0 * b_kernel(nu + 1.0, x, cfg) + math.sqrt((nu + 1.5) ** 2 + x * x)
    return nu + 2.0 * b_kernel(nu, x, cfg) + x * x / denominator


def cond_prior_nu_plus_one(nu, x, cfg=None):
    _require(nu > -1.5, f"nu + 1 lower bound needs nu > -3/2, got {nu}")
    return nu + 1.0


def cond_prior_x_minus_nu(nu, x, cfg=None):
    # C(L_nu) ~ x - 1/2 at large x, so x - nu only holds from nu = 1/2 up
    _require(nu >= 0.5, f"x - nu lower bound needs nu >= 1/2, got {nu}")
    return x - nu


def cond_prior_coth(nu, x, cfg=None):
    _require(nu >= 0.5, f"x coth(x/2) - nu lower bound needs nu >= 1/2, got {nu}")
    return x / math.tanh(0.5 * x) - nu


# ------------------------------------------------------------
# Brackets
# ------------------------------------------------------------
def cond_bracket_via_bessel(nu, x, cfg=None):
    bracket = Bracket(lower_id="eq28_lower", upper_id="eq28_upper")
    if nu >= 0.5:
        bracket.lower = cond_lower_via_bessel(nu, x, cfg)
        bracket.lower_valid = True
    if nu >= -0.5:
        bracket.upper = cond_upper_via_bessel(nu, x, cfg)
        bracket.upper_valid = True
    return bracket


_VARIANTS = {
    "eq29": ((cond_lower_eq29, 0.5, True, "eq29_lower"), (cond_upper_eq29, -0.5, True, "eq29_upper")),
    "eq30": ((cond_lower_eq30, -1.0, True, "eq30_lower"), (cond_upper_eq30, -0.5, True, "eq30_upper")),
    "eq31": ((cond_lower_eq31, -1.0, True, "eq31_lower"), None),
    "apti": (None, (cond_upper_apti, -1.5, False, "eq27_upper")),
}

_PRIOR_LOWERS = (
    (cond_prior_nu_plus_one, -1.5, False, "prior_nup1"),
    (cond_prior_x_minus_nu, 0.5, True, "prior_xminus"),
    (cond_prior_coth, 0.5, True, "prior_coth"),
)


def _in_range(nu, floor, inclusive):
    return nu >= floor if inclusive else nu > floor


def cond_bracket_sqrt(nu, x, variant, cfg=None):
    bracket = Bracket()
    if variant == "prior":
        for formula, floor, inclusive, bound_id in _PRIOR_LOWERS:
            if not _in_range(nu, floor, inclusive):
                continue
            value = formula(nu, x, cfg)
            if not bracket.lower_valid or value > bracket.lower:
                bracket.lower, bracket.lower_id, bracket.lower_valid = value, bound_id, True
                bracket.lower_equality = bound_id == "prior_coth" and abs(nu - 0.5) <= EQUALITY_TOL
    elif variant in _VARIANTS:
        lower, upper = _VARIANTS[variant]
        if lower is not None:
            formula, floor, inclusive, bound_id = lower
            bracket.lower_id = bound_id
            if _in_range(nu, floor, inclusive):
                bracket.lower, bracket.lower_valid = formula(nu, x, cfg), True
        if upper is not None:
            formula, floor, inclusive, bound_id = upper
            bracket.upper_id = bound_id
            if _in_range(nu, floor, inclusive):
                bracket.upper, bracket.upper_valid = formula(nu, x, cfg), True
    else:
        raise DomainError(f"unknown condition-number variant {variant!r}")

    if not (bracket.lower_valid or bracket.upper_valid):
        raise DomainError(f"variant {variant!r} has no valid side at nu={nu}")
    return bracket


def cond_i_segura_bracket(nu, x):
    """Square-root bracket for C(I_nu)(x): lower for nu >= 1/2, upper for nu >= -1/2."""
    bracket = Bracket(lower_id="cond_i_sqrt_lower", upper_id="cond_i_sqrt_upper")
    if nu >= 0.5:
        bracket.lower = math.sqrt((nu - 0.5) ** 2 + x * x) - 0.5
        bracket.lower_valid = True
    if nu >= -0.5:
        bracket.upper = math.sqrt((nu + 0.5) ** 2 + x * x) - 0.5
        bracket.upper_valid = True
    return bracket


def cond_asym(nu, x, regime):
    """Two-term behaviour of C(L_nu)(x) as x -> 0 or x -> infinity."""
    if regime == "small":
        return nu + 1.0 + 2.0 * x * x / (3.0 * (2.0 * nu + 3.0))
    if regime == "large":
        return x - 0.5 + (4.0 * nu * nu - 1.0) / (8.0 * x)
    raise DomainError(f"regime must be 'small' or 'large', got {regime!r}")


CONDITION_BOUNDS = [
    BoundSpec(id="eq27_upper", target="cond_L", side="upper", nu_min=-1.5, nu_min_inclusive=False,
              formula=cond_upper_apti, description="sqrt(x^2 + nu^2 + 2 (2 nu + 1) b_nu)"),
    BoundSpec(id="eq28_lower", target="cond_L", side="lower", nu_min=0.5,
              formula=cond_lower_via_bessel, description="C(I_nu)"),
    BoundSpec(id="eq28_upper", target="cond_L", side="upper", nu_min=-0.5,
              formula=cond_upper_via_bessel, description="C(I_nu) + 2 b_nu"),
    BoundSpec(id="eq29_lower", target="cond_L", side="lower", nu_min=0.5,
              formula=cond_lower_eq29, description="sqrt((nu - 1/2)^2 + x^2) - 1/2"),
    BoundSpec(id="eq29_upper", target="cond_L", side="upper", nu_min=-0.5,
              formula=cond_upper_eq29, description="sqrt((nu + b_nu)^2 + x^2) + b_nu"),
    BoundSpec(id="eq30_lower", target="cond_L", side="lower", nu_min=-1.0,
              formula=cond_lower_eq30, description="sqrt((nu + 1 + b_{nu+1})^2 + x^2) + 2 b_nu - b_{nu+1} - 1"),
    BoundSpec(id="eq30_upper", target="cond_L", side="upper", nu_min=-0.5,
              formula=cond_upper_eq30, description="sqrt((nu + 1/2)^2 + x^2) + 2 b_nu - 1/2"),
    BoundSpec(id="eq31_lower", target="cond_L", side="lower", nu_min=-1.0,
              formula=cond_lower_eq31, description="nu + 2 b_nu + x^2 / (...)"),
    BoundSpec(id="prior_nup1", target="cond_L", side="lower", nu_min=-1.5, nu_min_inclusive=False,
              formula=cond_prior_nu_plus_one, description="nu + 1"),
    BoundSpec(id="prior_xminus", target="cond_L", side="lower", nu_min=0.5,
              formula=cond_prior_x_minus_nu, description="x - nu"),
    BoundSpec(id="prior_coth", target="cond_L", side="lower", nu_min=0.5, equality_nu=0.5,
              formula=cond_prior_coth, description="x coth(x/2) - nu"),
]
