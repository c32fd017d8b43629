# struve_bounds/special_core.py
"""
Reference evaluation of the modified Bessel function I_nu, the modified Struve
function L_nu and M_nu = L_nu - I_nu.

Everything downstream (bounds, certification, tables) takes its exact values
from the power series here. The quadrature oracles exist only to cross-check
the series.
"""
import logging
import math
import warnings
from functools import lru_cache

from scipy import integrate, special

from struve_bounds.config import get_config
from struve_bounds.errors import (
    CancellationWarning,
    ConvergenceError,
    DomainError,
    OverflowRisk,
    QuadratureError,
)
from struve_bounds.models import FuncValue

logger = logging.getLogger(__name__)

SQRT_PI = math.sqrt(math.pi)
NU_FLOOR = -1.5

# |L - I| / max(|L|, |I|) below this raises the cancellation flag
CANCELLATION_LIMIT = 1e-6
# below this the integral representation replaces the direct difference
INTEGRAL_SWITCH = 1e-3

QUAD_TOL = 1e-12
QUAD_LIMIT = 200


# ------------------------------------------------------------
# Small helpers
# ------------------------------------------------------------
def gamma_pos(a):
    """Gamma function on the positive axis."""
    if not math.isfinite(a) or a <= 0.0:
        raise DomainError(f"gamma_pos needs a finite positive argument, got {a}")
    return float(special.gamma(a))


def _check_x(x, cfg):
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"x must be a finite positive number, got {x}")
    if x > cfg.x_max:
        raise OverflowRisk(f"x={x} exceeds x_max={cfg.x_max}")


def _check_nu(nu):
    if not math.isfinite(nu):
        raise DomainError(f"order must be finite, got {nu}")


def _is_negative_integer(nu):
    return nu < 0 and float(nu).is_integer()


def _pow(base, exponent):
    try:
        return math.pow(base, exponent)
    except OverflowError:
        return math.inf


def inhomogeneous_term(nu, x):
    """a_nu(x) = (x/2)^nu / (sqrt(pi) Gamma(nu + 3/2)), the right-hand side of the Struve recurrences."""
    if nu + 1.5 <= 0.0:
        raise DomainError(f"a_nu(x) needs nu > -3/2, got {nu}")
    log_a = nu * math.log(0.5 * x) - math.log(SQRT_PI) - float(special.gammaln(nu + 1.5))
    return math.exp(log_a)


# ------------------------------------------------------------
# Power series
# ------------------------------------------------------------
def _first_term_index(shift):
    """First n >= 0 for which 1/Gamma(n + shift) does not vanish."""
    if shift <= 0 and float(shift).is_integer():
        return int(-shift) + 1
    return 0


def _sum_series(first, n0, shift_a, shift_b, q, rel_tol, max_terms):
    """
    Sum t_n (n >= n0) with t_{n+1} = t_n * q / ((n + shift_a)(n + shift_b)).

    Stops once twice the next term drops below rel_tol times the running
    absolute sum; the final value is an exactly rounded sum of the kept terms.
    """
    terms = [first]
    scale = abs(first)
    term = first
    n = n0
    while True:
        nxt = term * q / ((n + shift_a) * (n + shift_b))
        n += 1
        if 2.0 * abs(nxt) <= rel_tol * scale:
            break
        if len(terms) >= max_terms:
            raise ConvergenceError(
                f"series not converged after {max_terms} terms (q={q})"
            )
        terms.append(nxt)
        scale += abs(nxt)
        term = nxt
    value = math.fsum(terms)
    est = 2.0 * abs(nxt) / abs(value) if value != 0.0 else math.inf
    return value, len(terms), est


@lru_cache(maxsize=65536)
def _bessel_i_series(nu, x, rel_tol, max_terms):
    half = 0.5 * x
    n0 = _first_term_index(nu + 1.0)
    first = _pow(half, 2 * n0 + nu) * float(special.rgamma(n0 + 1.0)) * float(special.rgamma(n0 + nu + 1.0))
    if not math.isfinite(first):
        raise OverflowRisk(f"leading I term overflows at nu={nu}, x={x}")
    return _sum_series(first, n0, 1.0, nu + 1.0, half * half, rel_tol, max_terms)


@lru_cache(maxsize=65536)
def _struve_l_series(nu, x, rel_tol, max_terms):
    half = 0.5 * x
    n0 = _first_term_index(nu + 1.5)
    first = _pow(half, 2 * n0 + nu + 1.0) * float(special.rgamma(n0 + 1.5)) * float(special.rgamma(n0 + nu + 1.5))
    if not math.isfinite(first):
        raise OverflowRisk(f"leading L term overflows at nu={nu}, x={x}")
    return _sum_series(first, n0, 1.5, nu + 1.5, half * half, rel_tol, max_terms)


def bessel_i(nu, x, cfg=None):
    """
    I_nu(x) by its power series.

    Accepts nu >= -3/2 and negative integer orders (I_{-n} = I_n); the terms
    are all positive only for nu > -1.
    """
    cfg = cfg or get_config()
    _check_nu(nu)
    _check_x(x, cfg)
    if _is_negative_integer(nu):
        nu = -nu
    if nu < NU_FLOOR:
        raise DomainError(f"bessel_i supports nu >= -3/2 or negative integers, got {nu}")
    value, terms, est = _bessel_i_series(float(nu), float(x), cfg.rel_tol, cfg.max_terms)
    return FuncValue(value=value, terms_used=terms, est_rel_error=est)


def struve_l(nu, x, cfg=None):
    """L_nu(x) by its power series, nu >= -3/2."""
    cfg = cfg or get_config()
    _check_nu(nu)
    _check_x(x, cfg)
    if nu < NU_FLOOR:
        raise DomainError(f"struve_l needs nu >= -3/2, got {nu}")
    value, terms, est = _struve_l_series(float(nu), float(x), cfg.rel_tol, cfg.max_terms)
    return FuncValue(value=value, terms_used=terms, est_rel_error=est)


# ------------------------------------------------------------
# Integral representations
# ------------------------------------------------------------
def _integral_prefactor(nu, x):
    return 2.0 * math.exp(nu * math.log(0.5 * x) - float(special.gammaln(nu + 0.5))) / SQRT_PI


def _adaptive_quad(integrand, epsabs, epsrel):
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            value, abserr = integrate.quad(
                integrand, 0.0, 0.5 * math.pi, epsabs=epsabs, epsrel=epsrel, limit=QUAD_LIMIT
            )
            return value
        except integrate.IntegrationWarning as warn:
            logger.debug("quad warned (%s), retrying without escalation", warn)

    # roundoff warnings with a small reported error are accepted
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, abserr = integrate.quad(
            integrand, 0.0, 0.5 * math.pi, epsabs=epsabs, epsrel=epsrel, limit=QUAD_LIMIT
        )
    if abserr > 100.0 * max(epsabs, epsrel * abs(value)):
        raise QuadratureError(f"quadrature error estimate {abserr:.3e} for value {value:.6e}")
    return value


def _oracle(nu, x, kernel):
    if not math.isfinite(nu) or nu <= -0.5:
        raise DomainError(f"quadrature oracle needs nu > -1/2, got {nu}")
    if not math.isfinite(x) or not (0.0 < x <= 600.0):
        raise DomainError(f"quadrature oracle needs 0 < x <= 600, got {x}")

    # t = sin(theta) turns the weight (1 - t^2)^(nu - 1/2) dt into cos(theta)^(2 nu)
    def integrand(theta):
        return math.cos(theta) ** (2.0 * nu) * kernel(x * math.sin(theta))

    return _integral_prefactor(nu, x) * _adaptive_quad(integrand, QUAD_TOL, QUAD_TOL)


def quad_oracle_i(nu, x):
    return _oracle(nu, x, math.cosh)


def quad_oracle_l(nu, x):
    return _oracle(nu, x, math.sinh)


def _struve_m_integral(nu, x):
    def integrand(theta):
        return math.cos(theta) ** (2.0 * nu) * math.exp(-x * math.sin(theta))

    return -_integral_prefactor(nu, x) * _adaptive_quad(integrand, 0.0, QUAD_TOL)


def struve_m(nu, x, cfg=None):
    """
    M_nu(x) = L_nu(x) - I_nu(x).

    The direct difference loses roughly 0.87 x digits; once it has lost three
    the integral representation (nu > -1/2) or the closed form (nu = -1/2)
    takes over. The cancellation flag reports a loss of more than six.
    """
    cfg = cfg or get_config()
    struve = struve_l(nu, x, cfg)
    bessel = bessel_i(nu, x, cfg)
    diff = struve.value - bessel.value
    scale = max(abs(struve.value), abs(bessel.value))
    ratio = abs(diff) / scale if scale > 0.0 else 1.0
    cancellation = ratio < CANCELLATION_LIMIT
    terms = max(struve.terms_used, bessel.terms_used)

    if ratio < INTEGRAL_SWITCH and nu > -0.5:
        value = _struve_m_integral(nu, x)
        est = QUAD_TOL
        logger.debug("M_%s(%s) from the integral representation (ratio %.2e)", nu, x, ratio)
    elif ratio < INTEGRAL_SWITCH and nu == -0.5:
        value = -math.sqrt(2.0 / (math.pi * x)) * math.exp(-x)
        est = 4.0 * math.ulp(1.0)
    else:
        value = diff
        est = (struve.est_rel_error * abs(struve.value) + bessel.est_rel_error * abs(bessel.value)
               + 2.0 * math.ulp(scale)) / abs(diff) if diff != 0.0 else math.inf

    if cancellation:
        logger.warning("cancellation in L - I at nu=%s, x=%s (ratio %.2e)", nu, x, ratio)
        warnings.warn(f"L - I cancels at nu={nu}, x={x}", CancellationWarning, stacklevel=2)
    return FuncValue(value=value, terms_used=terms, est_rel_error=est, cancellation=cancellation)


# ------------------------------------------------------------
# Closed forms and asymptotics
# ------------------------------------------------------------
def _cosh_minus_sinhc(x):
    """cosh(x) - sinh(x)/x without cancellation for small x."""
    if abs(x) >= 1.0:
        return math.cosh(x) - math.sinh(x) / x
    x2 = x * x
    total = 0.0
    power = 1.0
    k = 1
    while True:
        power *= x2
        term = 2 * k * power / math.factorial(2 * k + 1)
        total += term
        if term < 1e-17 * total:
            return total
        k += 1


_HALF_INTEGER_FORMS = {
    ("I", 0.5): lambda x: math.sinh(x),
    ("I", -0.5): lambda x: math.cosh(x),
    ("I", -1.5): lambda x: math.sinh(x) - math.cosh(x) / x,
    ("L", 0.5): lambda x: 2.0 * math.sinh(0.5 * x) ** 2,
    ("L", -0.5): lambda x: math.sinh(x),
    ("L", -1.5): _cosh_minus_sinhc,
}


def half_integer_closed(kind, nu, x):
    form = _HALF_INTEGER_FORMS.get((kind, float(nu)))
    if form is None:
        raise DomainError(f"no closed form for kind={kind!r}, nu={nu}")
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"x must be positive, got {x}")
    return math.sqrt(2.0 / (math.pi * x)) * form(x)


def asym_large_x(kind, nu, x):
    """Three-term large-x expansion; identical for I and L."""
    if kind not in ("I", "L"):
        raise DomainError(f"asym_large_x supports I and L, got {kind!r}")
    mu = 4.0 * nu * nu
    correction = 1.0 - (mu - 1.0) / (8.0 * x) + (mu - 1.0) * (mu - 9.0) / (128.0 * x * x)
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * correction


def small_x_leading(kind, nu, x):
    if kind == "I":
        if nu <= -1.0:
            raise DomainError(f"small-x form of I needs nu > -1, got {nu}")
        return _pow(x, nu) / (_pow(2.0, nu) * gamma_pos(nu + 1.0))
    if kind == "L":
        if nu <= -1.5:
            raise DomainError(f"small-x form of L needs nu > -3/2, got {nu}")
        lead = _pow(x, nu + 1.0) / (SQRT_PI * _pow(2.0, nu) * gamma_pos(nu + 1.5))
        return lead * (1.0 + x * x / (3.0 * (2.0 * nu + 3.0)))
    raise DomainError(f"small_x_leading supports I and L, got {kind!r}")


# ------------------------------------------------------------
# Ratios and recurrences
# ------------------------------------------------------------
_EVALUATORS = {"I": bessel_i, "L": struve_l, "M": struve_m}


def ratio_succ_exact(kind, nu, x, cfg=None):
    """f_nu(x) / f_{nu-1}(x) for f in {I, L, M}."""
    evaluator = _EVALUATORS.get(kind)
    if evaluator is None:
        raise DomainError(f"unknown function kind {kind!r}")
    if kind == "M" and nu < 0.5:
        raise DomainError(f"M ratio needs nu >= 1/2, got {nu}")
    return evaluator(nu, x, cfg).value / evaluator(nu - 1.0, x, cfg).value


def recurrence_check(nu, x, cfg=None):
    """Residuals of both Struve recurrences, normalised by L_{nu-1}(x)."""
    if nu <= -0.5:
        raise DomainError(f"recurrence_check needs nu > -1/2, got {nu}")
    lower = struve_l(nu - 1.0, x, cfg).value
    mid = struve_l(nu, x, cfg).value
    upper = struve_l(nu + 1.0, x, cfg).value
    a_term = inhomogeneous_term(nu, x)
    derivative = lower - nu / x * mid
    first = abs(lower - upper - 2.0 * nu / x * mid - a_term) / abs(lower)
    second = abs(lower + upper - 2.0 * derivative + a_term) / abs(lower)
    return first, second
