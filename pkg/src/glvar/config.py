"""Runtime settings read from the environment.

Every knob has a built-in default, can be overridden by an environment
variable, and can be overridden again by an explicit function argument or
CLI flag.
"""

import os
from collections.abc import Mapping
from typing import NamedTuple

DEFAULT_BUDGET = 100_000
DEFAULT_WORKERS = 1
DEFAULT_WITNESS_BUDGET = 2_000
DEFAULT_MAX_LEVEL = 6

ENV_BUDGET = "GLVAR_BUDGET"
ENV_WORKERS = "GLVAR_WORKERS"
ENV_WITNESS_BUDGET = "GLVAR_WITNESS_BUDGET"
ENV_MAX_LEVEL = "GLVAR_MAX_LEVEL"


class Settings(NamedTuple):
    """Resolved runtime settings.

    Attributes:
        budget: Maximum number of S-pair reductions per Gröbner computation
        workers: Worker processes used when computing dimensions over a range
        witness_budget: Search nodes allowed when looking for rational witnesses
        max_dimension_level: Highest level probed by the dimension certificate

    """

    budget: int
    workers: int
    witness_budget: int
    max_dimension_level: int


def _read_positive(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{name} must be a positive integer, got {raw!r}")
    return value


def load_settings(env: Mapping[str, str] | None = None) -> Settings:
    """Load settings from environment variables.

    Args:
        env: Mapping to read from. Defaults to ``os.environ``.

    Returns:
        Settings with defaults filled in for unset variables

    Raises:
        ValueError: If a variable is set to something other than a positive integer

    Example:
        >>> load_settings({"GLVAR_BUDGET": "500"}).budget
        500

    """
    source = os.environ if env is None else env
    return Settings(
        budget=_read_positive(source, ENV_BUDGET, DEFAULT_BUDGET),
        workers=_read_positive(source, ENV_WORKERS, DEFAULT_WORKERS),
        witness_budget=_read_positive(source, ENV_WITNESS_BUDGET, DEFAULT_WITNESS_BUDGET),
        max_dimension_level=_read_positive(source, ENV_MAX_LEVEL, DEFAULT_MAX_LEVEL),
    )


def resolve_budget(budget: int | None) -> int:
    """Return ``budget`` if given, else the configured default."""
    if budget is not None:
        if budget <= 0:
            raise ValueError(f"budget must be positive, got {budget}")
        return budget
    return load_settings().budget
