# struve_bounds/errors.py
"""Exception hierarchy shared by the evaluator, the bound modules and the CLI."""


class StruveError(Exception):
    """Base class for every error raised by struve_bounds."""


class DomainError(StruveError, ValueError):
    """Order or argument outside the documented validity range."""


class ConvergenceError(StruveError, ArithmeticError):
    """A power series did not reach the requested tolerance within max_terms."""


class OverflowRisk(StruveError, OverflowError):
    """Argument beyond the configured x_max; the series would overflow a double."""


class QuadratureError(StruveError, ArithmeticError):
    """Adaptive quadrature could not meet its tolerance."""


class InvalidBracket(StruveError, ValueError):
    """A bracket whose lower side exceeds its upper side."""


class NoValidBound(StruveError, LookupError):
    """No registered bound applies at the requested order."""


class UnknownBound(StruveError, KeyError):
    """Bound id not present in the registry."""

    def __str__(self):
        return f"unknown bound id: {self.args[0]!r}" if self.args else "unknown bound id"


class NoSignChange(StruveError, ValueError):
    """Two bounds never cross on the scanned interval."""


class MultipleSignChanges(StruveError, ValueError):
    """Two bounds cross more than once on the scanned interval."""


class ConfigError(StruveError, ValueError):
    """Malformed environment configuration."""


class CancellationWarning(UserWarning):
    """L - I lost more than six significant digits to cancellation."""
