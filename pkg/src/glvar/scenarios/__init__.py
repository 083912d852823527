"""Named worked examples that check their own certificates."""

from glvar.scenarios.exceptions import UnknownScenarioError
from glvar.scenarios.registry import (
    ScenarioReport,
    resolve_scenario,
    run_scenario,
    scenario_aliases,
    scenario_names,
)

__all__ = [
    "ScenarioReport",
    "resolve_scenario",
    "run_scenario",
    "scenario_aliases",
    "scenario_names",
    "UnknownScenarioError",
]
