"""Exceptions for partition and tuple handling."""

from glvar.exceptions import GlvarError


class PartitionError(GlvarError, ValueError):
    """Base exception for partition-related errors."""

    pass


class PartitionSyntaxError(PartitionError):
    """Raised when partition or tuple text does not follow the grammar.

    Args:
        text: The text that failed to parse
        position: Zero-based character offset of the problem
        reason: Short description of what was expected
        message: Optional custom error message

    Example:
        >>> try:
        ...     parse_partition("[2,,1]")
        ... except PartitionSyntaxError as e:
        ...     print(e.position)
        3

    """

    def __init__(
        self,
        text: str,
        position: int,
        reason: str = "unexpected character",
        message: str | None = None,
    ) -> None:
        """Initialize PartitionSyntaxError."""
        self.text = text
        self.position = position
        self.reason = reason
        if message is None:
            message = f"{reason} at position {position}\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class InvalidPartitionError(PartitionError):
    """Raised when a sequence is not a partition.

    Parts must be non-negative integers in weakly decreasing order.

    Args:
        parts: The offending sequence
        message: Optional custom error message

    """

    def __init__(self, parts: tuple[int, ...], message: str | None = None) -> None:
        """Initialize InvalidPartitionError."""
        self.parts = parts
        if message is None:
            message = f"Not a partition (parts must be positive and weakly decreasing): {list(parts)}"
        super().__init__(message)


class NotContainedError(PartitionError):
    """Raised when removing a tuple that is not contained in another."""

    pass
