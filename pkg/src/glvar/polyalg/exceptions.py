"""Exceptions for polynomial arithmetic and ideal computations."""

from glvar.exceptions import GlvarError


class PolynomialError(GlvarError):
    """Base exception for polynomial and ideal errors."""

    pass


class PolynomialSyntaxError(PolynomialError, ValueError):
    """Raised when polynomial text does not follow the grammar.

    Args:
        text: The text that failed to parse
        position: Zero-based character offset of the problem
        reason: Short description of what went wrong
        message: Optional custom error message

    Example:
        >>> try:
        ...     parse_poly("x +* y", ring)
        ... except PolynomialSyntaxError as e:
        ...     print(e.position)
        3

    """

    def __init__(
        self,
        text: str,
        position: int,
        reason: str = "unexpected token",
        message: str | None = None,
    ) -> None:
        """Initialize PolynomialSyntaxError."""
        self.text = text
        self.position = position
        self.reason = reason
        if message is None:
            message = f"{reason} at position {position}\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class UnknownVariableError(PolynomialError, KeyError):
    """Raised when a variable name is not part of the ring.

    Args:
        name: The unknown variable
        position: Offset in the source text, when parsing
        message: Optional custom error message

    """

    def __init__(self, name: str, position: int | None = None, message: str | None = None) -> None:
        """Initialize UnknownVariableError."""
        self.name = name
        self.position = position
        if message is None:
            message = f"Unknown variable '{name}'"
            if position is not None:
                message += f" at position {position}"
        super().__init__(message)

    def __str__(self) -> str:
        return str(self.args[0])


class RingMismatchError(PolynomialError):
    """Raised when polynomials from different rings are combined."""

    pass


class BudgetExceededError(PolynomialError):
    """Raised when a Gröbner computation runs out of S-pair reductions.

    Args:
        budget: The configured budget
        steps: Steps taken when the computation stopped
        message: Optional custom error message

    """

    def __init__(self, budget: int, steps: int, message: str | None = None) -> None:
        """Initialize BudgetExceededError."""
        self.budget = budget
        self.steps = steps
        if message is None:
            message = (
                f"Gröbner budget of {budget} S-pair reductions exhausted "
                f"(raise it with --budget or GLVAR_BUDGET)"
            )
        super().__init__(message)


class IdealFormatError(PolynomialError):
    """Raised when an ideal file cannot be read.

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
        """Initialize IdealFormatError."""
        self.path = path
        self.original_error = original_error
        if message is None:
            message = f"Invalid ideal file: {path}"
            if original_error:
                message += f"\nOriginal error: {original_error}"
        super().__init__(message)
