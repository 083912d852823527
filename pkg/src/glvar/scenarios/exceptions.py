"""Exceptions for named scenarios."""

from glvar.exceptions import GlvarError


class UnknownScenarioError(GlvarError, KeyError):
    """Raised when a scenario name is not registered.

    Args:
        name: The requested name
        available: Registered names
        message: Optional custom error message

    """

    def __init__(self, name: str, available: list[str], message: str | None = None) -> None:
        """Initialize UnknownScenarioError."""
        self.name = name
        self.available = available
        if message is None:
            message = f"Unknown scenario: {name}. Available: {', '.join(available)}"
        super().__init__(message)

    def __str__(self) -> str:
        return str(self.args[0])
