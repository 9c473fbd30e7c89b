"""Errors raised by the multireg package."""


class MultiregError(Exception):
    """Base class for all multireg errors."""


class UsageError(MultiregError, ValueError):
    """A function was called outside of its domain."""


class SchemeValidationError(MultiregError):
    """A scheme file or scheme description failed validation."""


class UnsupportedShapeError(MultiregError):
    """The operation is only defined for another ambient space."""


class GenericityError(MultiregError):
    """A scheme asserted to have generic support does not."""

    def __init__(self, message: str, failing_degree=None) -> None:
        """Initialize GenericityError."""
        super().__init__(message)
        self.failing_degree = failing_degree


class InternalFormulaError(MultiregError):
    """A closed-form formula produced an impossible value."""
