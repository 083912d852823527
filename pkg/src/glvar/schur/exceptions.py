"""Exceptions for Schur-functor computations."""

from glvar.exceptions import GlvarError


class SchurError(GlvarError):
    """Base exception for Schur-functor errors."""

    pass


class ImpureTupleError(SchurError, ValueError):
    """Raised when a symmetric algebra is requested on a tuple containing ∅.

    A degree-zero generator makes every graded piece infinite dimensional,
    so the decomposition is undefined.

    Args:
        tuple_text: Text form of the offending tuple
        message: Optional custom error message

    """

    def __init__(self, tuple_text: str, message: str | None = None) -> None:
        """Initialize ImpureTupleError."""
        self.tuple_text = tuple_text
        if message is None:
            message = f"Tuple must be pure (no empty partition): {tuple_text}"
        super().__init__(message)
