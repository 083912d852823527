"""Tests for runtime settings."""

import pytest

from glvar.config import (
    DEFAULT_BUDGET,
    DEFAULT_MAX_LEVEL,
    DEFAULT_WITNESS_BUDGET,
    DEFAULT_WORKERS,
    Settings,
    load_settings,
    resolve_budget,
)


def test_defaults() -> None:
    """Test settings with nothing set."""
    settings = load_settings({})
    assert settings == Settings(DEFAULT_BUDGET, DEFAULT_WORKERS, DEFAULT_WITNESS_BUDGET, DEFAULT_MAX_LEVEL)
    assert settings.budget == 100_000
    assert settings.max_dimension_level == 6


def test_environment_override() -> None:
    """Test that each variable overrides its default."""
    settings = load_settings(
        {
            "GLVAR_BUDGET": "500",
            "GLVAR_WORKERS": "4",
            "GLVAR_WITNESS_BUDGET": "10",
            "GLVAR_MAX_LEVEL": "3",
        }
    )
    assert settings == Settings(budget=500, workers=4, witness_budget=10, max_dimension_level=3)


def test_blank_value_uses_default() -> None:
    """Test that an empty variable falls back to the default."""
    assert load_settings({"GLVAR_WORKERS": "  "}).workers == DEFAULT_WORKERS


@pytest.mark.parametrize("raw", ["0", "-3", "many", "1.5"])
def test_invalid_values(raw: str) -> None:
    """Test that non-positive or non-integer values are rejected."""
    with pytest.raises(ValueError, match="GLVAR_BUDGET"):
        load_settings({"GLVAR_BUDGET": raw})


def test_resolve_budget(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test explicit budgets against the environment."""
    monkeypatch.setenv("GLVAR_BUDGET", "42")
    assert resolve_budget(None) == 42
    assert resolve_budget(7) == 7
    monkeypatch.delenv("GLVAR_BUDGET")
    assert resolve_budget(None) == DEFAULT_BUDGET


def test_resolve_budget_rejects_zero() -> None:
    """Test that a zero budget is an error."""
    with pytest.raises(ValueError, match="positive"):
        resolve_budget(0)
