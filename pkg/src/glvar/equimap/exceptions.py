"""Exceptions for equivariant maps."""

from glvar.exceptions import GlvarError


class MapError(GlvarError):
    """Base exception for equivariant-map errors."""

    pass


class NotSingleRowError(MapError, ValueError):
    """Raised when a form space is built from a partition with other than one row.

    Args:
        partition: Text of the offending partition
        message: Optional custom error message

    """

    def __init__(self, partition: str, message: str | None = None) -> None:
        """Initialize NotSingleRowError."""
        self.partition = partition
        if message is None:
            message = (
                f"Partition {partition} is not a single row; equivariant maps are "
                f"only modelled between pure single-row tuples"
            )
        super().__init__(message)


class TupleMismatchError(MapError):
    """Raised when maps are combined along tuples that do not agree.

    Args:
        expected: Tuple that was required
        actual: Tuple that was supplied
        message: Optional custom error message

    """

    def __init__(self, expected: str, actual: str, message: str | None = None) -> None:
        """Initialize TupleMismatchError."""
        self.expected = expected
        self.actual = actual
        if message is None:
            message = f"Tuple mismatch: expected {expected}, got {actual}"
        super().__init__(message)


class AbstractCoefficientError(MapError):
    """Raised when an operation needs rational coefficients but the map has parameters.

    Args:
        parameters: Names of the coefficient symbols still present
        message: Optional custom error message

    """

    def __init__(self, parameters: tuple[str, ...], message: str | None = None) -> None:
        """Initialize AbstractCoefficientError."""
        self.parameters = parameters
        if message is None:
            message = f"Map has abstract coefficients {', '.join(parameters)}; substitute values first"
        super().__init__(message)


class NotHomogeneousError(MapError):
    """Raised when a body is not weighted-homogeneous of its target weight.

    Args:
        body: Text of the offending body
        weight: Required weighted degree
        message: Optional custom error message

    """

    def __init__(self, body: str, weight: int, message: str | None = None) -> None:
        """Initialize NotHomogeneousError."""
        self.body = body
        self.weight = weight
        if message is None:
            message = f"Body {body} is not weighted-homogeneous of weight {weight}"
        super().__init__(message)


class MapFormatError(MapError):
    """Raised when a map file cannot be read.

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
        """Initialize MapFormatError."""
        self.path = path
        self.original_error = original_error
        if message is None:
            message = f"Invalid map file: {path}"
            if original_error:
                message += f"\nOriginal error: {original_error}"
        super().__init__(message)
