"""Tests for the named scenarios."""

import pytest

from glvar.exceptions import GlvarError
from glvar.scenarios import (
    ScenarioReport,
    UnknownScenarioError,
    resolve_scenario,
    run_scenario,
    scenario_aliases,
    scenario_names,
)


def test_scenario_names() -> None:
    """Test that every worked example is registered."""
    assert scenario_names() == [
        "paper-9.3-shift",
        "paper-9.3-mapspace",
        "paper-9.5",
        "paper-9.6",
        "delta-rank1",
    ]


def test_scenario_aliases() -> None:
    """Test that descriptive aliases resolve to registered names."""
    assert scenario_aliases() == {
        "shift-localization": "paper-9.3-shift",
        "mapping-space": "paper-9.3-mapspace",
        "image-not-closed": "paper-9.5",
        "typical-not-open": "paper-9.6",
        "rank-one-dimension": "delta-rank1",
    }
    assert resolve_scenario("paper-9.5") == "paper-9.5"
    assert resolve_scenario("image-not-closed") == "paper-9.5"
    with pytest.raises(UnknownScenarioError):
        resolve_scenario("paper-9.4")


def test_unknown_scenario() -> None:
    """Test that an unknown name lists the available ones."""
    with pytest.raises(UnknownScenarioError) as exc_info:
        run_scenario("no-such-thing")
    assert isinstance(exc_info.value, KeyError)
    assert isinstance(exc_info.value, GlvarError)
    assert "no-such-thing" in str(exc_info.value)
    assert "paper-9.3-mapspace" in str(exc_info.value)


def test_report_verified() -> None:
    """Test that a report is verified only when every expected certificate matches."""
    good = ScenarioReport("x", 2, None, {}, {"a": "1", "b": "2"}, {"a": "1"})
    bad = ScenarioReport("x", 2, None, {}, {"a": "0"}, {"a": "1"})
    missing = ScenarioReport("x", 2, None, {}, {}, {"a": "1"})
    assert good.verified
    assert not bad.verified
    assert not missing.verified


def test_mapping_space_scenario() -> None:
    """Test maps from A^[(1)] into rank-one pairs."""
    report = run_scenario("paper-9.3-mapspace")
    assert report.verified
    assert report.certificates == {"symbols": "2", "ideal": "zero", "stabilized": "true"}
    assert report.stabilized is True
    assert report.result["dimension"] == 2


def test_delta_rank1_scenario() -> None:
    """Test the fitted dimension polynomial of rank-one pairs."""
    report = run_scenario("delta-rank1")
    assert report.verified
    assert report.certificates["polynomial"] == "d + 1"
    assert report.level == 5
    assert report.result["test"] == {"4": 5, "5": 6}


@pytest.mark.slow
def test_shift_localization_scenario() -> None:
    """Test that the shifted ideal is saturated and agrees with its localization."""
    report = run_scenario("paper-9.3-shift")
    assert report.verified
    assert set(report.certificates) == {
        f"level{d}.{k}" for d in (2, 3) for k in ("saturated", "localization", "contains")
    }


@pytest.mark.slow
def test_image_not_closed_scenario() -> None:
    """Test that the lifting system for ψ is inconsistent."""
    report = run_scenario("paper-9.5")
    assert report.verified
    assert report.certificates["groebner"] == "GB = {1}: no solutions"
    assert report.level is None


@pytest.mark.slow
def test_typical_not_open_scenario() -> None:
    """Test φ_0 typical while φ_1 factors through [(2),(2),(2)]."""
    report = run_scenario("paper-9.6")
    assert report.verified
    assert report.certificates == {"phi0": "typical", "phi1": "yes"}
