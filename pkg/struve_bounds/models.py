# struve_bounds/models.py
import math
from typing import Callable, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from struve_bounds.errors import DomainError

EQUALITY_TOL = 1e-12

Kind = Literal["I", "L", "M"]
Side = Literal["lower", "upper"]
Target = Literal[
    "succ_ratio_L",
    "succ_ratio_M",
    "cond_L",
    "arg_ratio_L",
    "pointwise_L",
    "b_kernel",
    "product_diff",
]


# ------------------------------------------------------------
# Evaluator configuration and results
# ------------------------------------------------------------
class EvalConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    rel_tol: float = 1e-16
    max_terms: int = 500
    x_max: float = 600.0

    @field_validator("rel_tol")
    @classmethod
    def _rel_tol_range(cls, value):
        if not (0.0 < value < 1e-6):
            raise ValueError("rel_tol must lie in (0, 1e-6)")
        return value

    @field_validator("max_terms")
    @classmethod
    def _max_terms_floor(cls, value):
        if value < 50:
            raise ValueError("max_terms must be at least 50")
        return value

    @field_validator("x_max")
    @classmethod
    def _x_max_positive(cls, value):
        if not (value > 0.0 and math.isfinite(value)):
            raise ValueError("x_max must be a positive finite number")
        return value


class FuncValue(BaseModel):
    value: float
    terms_used: int = Field(ge=0)
    est_rel_error: float = Field(ge=0.0)
    # set when L - I lost more than six digits; the value itself may come
    # from the integral representation
    cancellation: bool = False


class BValue(BaseModel):
    value: float = Field(ge=0.0, le=0.5)
    nu: float
    x: float = Field(gt=0.0)


class CondValue(BaseModel):
    value: float
    kind: Literal["L", "I"]
    nu: float
    x: float = Field(gt=0.0)


class Bracket(BaseModel):
    """Lower/upper pair; each side carries its own validity flag and bound id."""

    lower: float = math.nan
    upper: float = math.nan
    lower_valid: bool = False
    upper_valid: bool = False
    lower_id: Optional[str] = None
    upper_id: Optional[str] = None
    lower_equality: bool = False
    upper_equality: bool = False

    def is_ordered(self, rel_tol=EQUALITY_TOL):
        if not (self.lower_valid and self.upper_valid):
            return True
        slack = rel_tol * max(abs(self.lower), abs(self.upper), 1e-300)
        return self.lower <= self.upper + slack

    @property
    def width(self):
        if self.lower_valid and self.upper_valid:
            return self.upper - self.lower
        return math.inf


class BesselBracket(Bracket):
    tanh_lower: float = math.nan
    tanh_lower_valid: bool = False


class ArgPair(BaseModel):
    x: float = Field(gt=0.0)
    y: float = Field(gt=0.0)

    @property
    def coincident(self):
        return self.x == self.y


class ANuConstant(BaseModel):
    nu: float
    value: float
    stirling_lower: float
    stirling_upper: float


# ------------------------------------------------------------
# Registry entries
# ------------------------------------------------------------
class BoundSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    target: Target
    side: Side
    nu_min: float
    nu_min_inclusive: bool = True
    equality_nu: Optional[float] = None
    formula: Callable
    description: str = ""

    @property
    def needs_y(self):
        return self.target == "arg_ratio_L"

    def valid_for(self, nu):
        if self.nu_min_inclusive:
            return nu >= self.nu_min
        return nu > self.nu_min

    def is_equality(self, nu):
        return self.equality_nu is not None and abs(nu - self.equality_nu) <= EQUALITY_TOL

    def evaluate(self, nu, x, y=None, check=True):
        if check and not self.valid_for(nu):
            op = ">=" if self.nu_min_inclusive else ">"
            raise DomainError(f"{self.id} requires nu {op} {self.nu_min}, got {nu}")
        if self.needs_y:
            if y is None:
                raise DomainError(f"{self.id} needs a second argument y")
            return self.formula(nu, x, y)
        return self.formula(nu, x)


# ------------------------------------------------------------
# Verification results
# ------------------------------------------------------------
class Grid(BaseModel):
    nu_values: List[float]
    x_values: List[float]
    y_factors: List[float] = Field(default_factory=list)
    y_cap: float = 60.0

    @field_validator("nu_values", "x_values")
    @classmethod
    def _strictly_increasing(cls, values):
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError("grid values must be strictly increasing")
        return values

    @field_validator("x_values")
    @classmethod
    def _positive(cls, values):
        if any(v <= 0.0 for v in values):
            raise ValueError("x values must be positive")
        return values

    def y_values(self, x):
        return [x * f for f in self.y_factors if x * f <= self.y_cap]


class GridPoint(BaseModel):
    bound_id: str
    nu: float
    x: float
    y: Optional[float] = None
    slack: float
    status: Literal["ok", "equality", "violation", "error"]


class GridReport(BaseModel):
    bound_id: str
    points_checked: int = 0
    violations: List[GridPoint] = Field(default_factory=list)
    worst_slack: float = math.inf
    max_rel_gap: float = 0.0
    points: List[GridPoint] = Field(default_factory=list)
    errors: int = 0
    notes: List[str] = Field(default_factory=list)

    @property
    def passed(self):
        return not self.violations and self.errors == 0


class TableSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    table_id: int = Field(ge=1, le=6)
    nu_rows: List[float]
    x_cols: List[float]
    approximant_id: str
    exact_id: Target
    zero_column_rule: Optional[Literal["limit_formula", "zero", "infinity"]] = None
    caption: str = ""

    @model_validator(mode="after")
    def _zero_rule_matches_columns(self):
        has_zero = bool(self.x_cols) and self.x_cols[0] == 0.0
        if has_zero and self.zero_column_rule is None:
            raise ValueError("an x = 0 column needs a zero_column_rule")
        return self
