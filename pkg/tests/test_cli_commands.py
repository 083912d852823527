"""Tests for the glvar subcommands."""

import json
import re
from pathlib import Path

import pytest
from typer.testing import CliRunner

from glvar.cli.main import app

runner = CliRunner()


def _strip_ansi(text: str) -> str:
    """Strip ANSI color codes from text."""
    ansi_escape = re.compile(r"\x1b\[[0-9;]*m")
    return ansi_escape.sub("", text)


def _json(args: list[str]) -> dict:
    """Invoke a command with --json and parse its report."""
    result = runner.invoke(app, [*args, "--json"])
    assert result.exit_code == 0, result.stdout
    data = json.loads(result.stdout)
    assert set(data) == {"command", "inputs", "result", "certificates"}
    return data


def test_shift() -> None:
    """Test sh_1 of a single quadric."""
    result = runner.invoke(app, ["shift", "-n", "1", "[[2]]"])
    assert result.exit_code == 0
    assert "[[2],[1],[]]" in _strip_ansi(result.stdout)


def test_shift_json() -> None:
    """Test the JSON report of shift."""
    data = _json(["shift", "-n", "2", "[[2]]"])
    assert data["command"] == "shift"
    assert data["inputs"] == {"tuple": "[[2]]", "n": 2, "complement": False}
    assert data["result"] == "[[2],[1],[1],[],[],[]]"
    assert data["certificates"] == {"entries": 6}


def test_dim() -> None:
    """Test dim S_(2,1)(K^3) = 8."""
    result = runner.invoke(app, ["dim", "[2,1]", "--level", "3"])
    assert result.exit_code == 0
    assert _strip_ansi(result.stdout).strip() == "8"


def test_dim_syntax_error() -> None:
    """Test that a malformed partition is a usage error."""
    result = runner.invoke(app, ["dim", "[2,,1]", "--level", "3"])
    assert result.exit_code == 2


def test_lr() -> None:
    """Test a Littlewood-Richardson coefficient."""
    data = _json(["lr", "[3,2,1]", "[2,1]", "[2,1]"])
    assert data["result"] == 2
    result = runner.invoke(app, ["lr", "[2,1]", "[1]", "[1,1]"])
    assert result.exit_code == 0
    assert _strip_ansi(result.stdout).strip() == "1"


def test_sym() -> None:
    """Test Sym(V + V) up to degree 2."""
    data = _json(["sym", "[[1],[1]]", "--degree", "2"])
    multiplicities = {row["partition"]: row["multiplicity"] for row in data["result"]}
    assert multiplicities["[1]"] == 2
    assert multiplicities["[2]"] == 3
    assert multiplicities["[1,1]"] == 1
    result = runner.invoke(app, ["sym", "[[1],[1]]", "--degree", "2"])
    assert result.exit_code == 0
    assert "Multiplicity" in _strip_ansi(result.stdout)


def test_saturate(data_dir: Path) -> None:
    """Test that the shifted rank-one ideal is already saturated by ys_1."""
    ideal = str(data_dir / "ideals" / "shift_rank1_level2.json")
    result = runner.invoke(app, ["saturate", "--ideal", ideal, "--by", "ys_1"])
    assert result.exit_code == 0
    assert "already saturated" in _strip_ansi(result.stdout)

    data = _json(["saturate", "--ideal", ideal, "--by", "ys_1", "--order", "lex"])
    assert data["inputs"]["order"] == "lex"
    assert data["certificates"]["already_saturated"] is True
    assert data["certificates"]["unit"] is False
    assert len(data["result"]["basis"]) == 3


def test_saturate_unknown_variable(data_dir: Path) -> None:
    """Test that --by must use ring variables."""
    ideal = str(data_dir / "ideals" / "shift_rank1_level2.json")
    result = runner.invoke(app, ["saturate", "--ideal", ideal, "--by", "zz"])
    assert result.exit_code == 2


def test_saturate_missing_file(tmp_path: Path) -> None:
    """Test that an unreadable ideal file is a computation error."""
    result = runner.invoke(app, ["saturate", "--ideal", str(tmp_path / "none.json"), "--by", "x"])
    assert result.exit_code == 1
    assert "Error:" in _strip_ansi(result.stdout)


def test_closure(data_dir: Path) -> None:
    """Test the closure of (α v, β v) at level 2."""
    data = _json(["closure", "--map", str(data_dir / "maps" / "rank1_param.json"), "--level", "2"])
    assert data["certificates"] == {"dimension": 3, "ambient": 4, "level": 2}
    assert data["result"]["coordinates"] == ["x_1", "x_2", "y_1", "y_2"]
    assert len(data["result"]["basis"]) == 1


def test_membership(data_dir: Path) -> None:
    """Test that x_1^4 is a discriminant value at level 2."""
    data = _json(
        ["membership", "--map", str(data_dir / "maps" / "phi.json"), "--level", "2", "--point", "1,0,0,0,0"]
    )
    assert data["result"]["status"] == "member"
    assert data["certificates"]["level"] == 2


def test_membership_non_member(data_dir: Path) -> None:
    """Test a quadric of rank two against the squares."""
    result = runner.invoke(
        app, ["membership", "--map", str(data_dir / "maps" / "square.json"), "-l", "2", "-p", "1,0,1"]
    )
    assert result.exit_code == 0
    assert "non_member" in _strip_ansi(result.stdout)


def test_membership_wrong_arity(data_dir: Path) -> None:
    """Test that a point with the wrong length is a computation error."""
    result = runner.invoke(
        app, ["membership", "--map", str(data_dir / "maps" / "square.json"), "-l", "2", "-p", "1,0"]
    )
    assert result.exit_code == 1


def test_membership_bad_point(data_dir: Path) -> None:
    """Test that a non-numeric point is a usage error."""
    result = runner.invoke(
        app, ["membership", "--map", str(data_dir / "maps" / "square.json"), "-l", "2", "-p", "1,a,0"]
    )
    assert result.exit_code == 2


def test_factor(data_dir: Path) -> None:
    """Test that v -> v^2 factors through [(2),(1)] by inclusion."""
    data = _json(["factor", "--map", str(data_dir / "maps" / "square.json"), "--through", "[[2],[1]]"])
    assert data["certificates"] == {"verdict": "yes", "certificate": "inclusion"}
    assert data["result"]["mid"] == "[[2],[1]]"


@pytest.mark.slow
def test_typical(data_dir: Path) -> None:
    """Test that φ_0 is typical."""
    result = runner.invoke(app, ["typical", "--map", str(data_dir / "maps" / "phi0.json")])
    assert result.exit_code == 0
    output = _strip_ansi(result.stdout)
    assert "Factorization checks" in output
    assert output.strip().splitlines()[-1] == "typical"


def test_delta(data_dir: Path) -> None:
    """Test δ for rank-one pairs."""
    data = _json(["delta", "--family", str(data_dir / "families" / "rank1.json"), "--range", "1..3"])
    assert data["result"] == {"1": 2, "2": 3, "3": 4}
    assert data["certificates"] == {"levels": [1, 2, 3]}


def test_delta_fit(data_dir: Path) -> None:
    """Test fitting δ(d) = d + 1 and checking it on a higher level."""
    family = str(data_dir / "families" / "rank1.json")
    data = _json(["delta", "--family", family, "--range", "2..4", "--fit", "2..3"])
    assert data["result"]["polynomial"] == "d + 1"
    assert data["result"]["test"] == {"4": 5}
    assert data["certificates"]["agrees"] is True
    assert data["certificates"]["mismatches"] == []

    result = runner.invoke(app, ["delta", "--family", family, "--range", "2..4", "--fit", "2..3"])
    assert result.exit_code == 0
    assert "Agrees on test levels 4" in _strip_ansi(result.stdout)


def test_delta_bad_ranges(data_dir: Path) -> None:
    """Test range validation."""
    family = str(data_dir / "families" / "rank1.json")
    assert runner.invoke(app, ["delta", "--family", family, "--range", "3..2"]).exit_code == 2
    assert runner.invoke(app, ["delta", "--family", family, "--range", "two"]).exit_code == 2
    assert runner.invoke(app, ["delta", "--family", family, "--range", "2..3", "--fit", "2..3"]).exit_code == 2


def test_mapspace(data_dir: Path) -> None:
    """Test maps from A^[(1)] into rank-one pairs."""
    family = str(data_dir / "families" / "rank1.json")
    data = _json(["mapspace", "--source", "[[1]]", "--family", family])
    assert data["result"]["symbols"] == ["c1_1", "c2_1"]
    assert data["result"]["basis"] == []
    assert data["result"]["dimension"] == 2
    assert data["certificates"] == {"level": 3, "stabilized": True}

    result = runner.invoke(app, ["mapspace", "--source", "[[1]]", "--family", family])
    assert result.exit_code == 0
    output = _strip_ansi(result.stdout)
    assert "2 coefficient symbols" in output
    assert "Stabilized" in output


def test_scenario_verify() -> None:
    """Test that a verified scenario exits cleanly."""
    result = runner.invoke(app, ["scenario", "paper-9.3-mapspace", "--verify"])
    assert result.exit_code == 0
    output = _strip_ansi(result.stdout)
    assert "Scenario: paper-9.3-mapspace" in output
    assert "verified" in output


def test_scenario_alias() -> None:
    """Test that a descriptive alias runs the registered scenario."""
    data = _json(["scenario", "mapping-space", "--verify"])
    assert data["inputs"]["name"] == "paper-9.3-mapspace"
    assert data["inputs"]["requested"] == "mapping-space"
    assert data["certificates"]["verified"] is True


def test_scenario_json() -> None:
    """Test the JSON report of a scenario."""
    data = _json(["scenario", "delta-rank1"])
    assert data["certificates"]["verified"] is True
    assert data["certificates"]["computed"]["polynomial"] == "d + 1"
    assert data["result"]["level"] == 5


@pytest.mark.slow
def test_scenario_image_not_closed() -> None:
    """Test that the lifting system for ψ prints its symbols and an inconsistent basis."""
    result = runner.invoke(app, ["scenario", "paper-9.5", "--verify"])
    assert result.exit_code == 0
    output = _strip_ansi(result.stdout)
    assert "GB = {1}: no solutions" in output
    data = _json(["scenario", "paper-9.5"])
    assert data["result"]["unknowns"] == 18
    assert len(data["result"]["symbols"]) == 18
    assert data["certificates"]["verified"] is True


def test_scenario_unknown() -> None:
    """Test that an unknown scenario is a computation error."""
    result = runner.invoke(app, ["scenario", "no-such-thing"])
    assert result.exit_code == 1
    assert "Unknown scenario" in _strip_ansi(result.stdout)


def test_budget_exhausted(data_dir: Path) -> None:
    """Test that running out of Gröbner budget exits with code 1."""
    result = runner.invoke(
        app,
        ["closure", "--map", str(data_dir / "maps" / "rank1_param.json"), "--level", "2", "--budget", "1"],
    )
    assert result.exit_code == 1
    assert "--budget" in _strip_ansi(result.stdout)
