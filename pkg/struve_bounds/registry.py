# struve_bounds/registry.py
"""Every certified inequality by stable id, plus the exact evaluator for each target."""
from struve_bounds.arg_ratio_bounds import ARG_RATIO_BOUNDS, arg_ratio_exact
from struve_bounds.bfunc import B_KERNEL_BOUNDS, b_kernel
from struve_bounds.condition_bounds import CONDITION_BOUNDS, cond_exact
from struve_bounds.errors import UnknownBound
from struve_bounds.models import ArgPair
from struve_bounds.special_core import ratio_succ_exact, struve_l
from struve_bounds.succ_ratio_bounds import SUCC_RATIO_BOUNDS, product_difference

_ALL_BOUNDS = B_KERNEL_BOUNDS + SUCC_RATIO_BOUNDS + CONDITION_BOUNDS + ARG_RATIO_BOUNDS

REGISTRY = {spec.id: spec for spec in _ALL_BOUNDS}

if len(REGISTRY) != len(_ALL_BOUNDS):
    raise RuntimeError("duplicate bound id in registry")


def _arg_ratio(nu, x, y):
    return arg_ratio_exact(nu, ArgPair(x=x, y=y))


TARGET_EXACT = {
    "succ_ratio_L": lambda nu, x, y=None: ratio_succ_exact("L", nu, x),
    "succ_ratio_M": lambda nu, x, y=None: ratio_succ_exact("M", nu, x),
    "cond_L": lambda nu, x, y=None: cond_exact("L", nu, x).value,
    "arg_ratio_L": lambda nu, x, y=None: _arg_ratio(nu, x, y),
    "pointwise_L": lambda nu, x, y=None: struve_l(nu, x).value,
    "b_kernel": lambda nu, x, y=None: b_kernel(nu, x),
    "product_diff": lambda nu, x, y=None: product_difference(nu, x).value,
}


def get_bound(bound_id):
    try:
        return REGISTRY[bound_id]
    except KeyError:
        raise UnknownBound(bound_id) from None


def bound_ids(target=None):
    return [spec.id for spec in _ALL_BOUNDS if target is None or spec.target == target]


def exact_value(target, nu, x, y=None):
    return TARGET_EXACT[target](nu, x, y)
