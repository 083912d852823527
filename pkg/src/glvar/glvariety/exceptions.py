"""Exceptions for finite-level varieties."""

from glvar.exceptions import GlvarError


class VarietyError(GlvarError):
    """Base exception for variety and family errors."""

    pass


class ArityError(VarietyError, ValueError):
    """Raised when a point has the wrong number of coordinates.

    Args:
        expected: Required number of coordinates
        actual: Number supplied
        message: Optional custom error message

    """

    def __init__(self, expected: int, actual: int, message: str | None = None) -> None:
        """Initialize ArityError."""
        self.expected = expected
        self.actual = actual
        if message is None:
            message = f"Expected {expected} coordinates, got {actual}"
        super().__init__(message)


class FamilyFormatError(VarietyError):
    """Raised when a family file cannot be read.

    Args:
        path: Path to the file
        original_error: Underlying exception, if any
        message: Optional custom error message

    """

    def __init__(
        self,
        path: str,
        original_error: Exception | None = None,
        message: str | None = None,
    ) -> None:
        """Initialize FamilyFormatError."""
        self.path = path
        self.original_error = original_error
        if message is None:
            message = f"Invalid family file: {path}"
            if original_error:
                message += f"\nOriginal error: {original_error}"
        super().__init__(message)
