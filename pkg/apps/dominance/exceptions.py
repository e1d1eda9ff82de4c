# Django
from django.core.exceptions import ValidationError


class DominanceError(Exception):
    """Base class for operational failures of the solver."""


class InstanceError(ValidationError):
    """An instance violates the data model (non-finite value, bad budget, empty Q)."""


class InstanceFormatError(InstanceError):
    """A line of an instance file cannot be parsed."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(message=f"line {line}: {message}")


class NotRankedError(InstanceError):
    """Grid construction was asked for on an unranked or undropped instance."""


class SweepExhausted(DominanceError):
    """The rho sweep was advanced past the sentinel row."""


class OracleLimitExceeded(DominanceError):
    """The exhaustive solver would enumerate more subsets than allowed."""


class RenderLimitExceeded(DominanceError):
    """The instance is too large to render legibly."""
