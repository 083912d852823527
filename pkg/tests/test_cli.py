"""Tests for CLI entry point."""

import re

from typer.testing import CliRunner

from glvar import __version__
from glvar.cli.main import app

runner = CliRunner()


def _strip_ansi(text: str) -> str:
    """Strip ANSI color codes from text."""
    ansi_escape = re.compile(r"\x1b\[[0-9;]*m")
    return ansi_escape.sub("", text)


def test_cli_help() -> None:
    """Test CLI --help flag."""
    result = runner.invoke(app, ["--help"])
    assert result.exit_code == 0
    output = _strip_ansi(result.stdout)
    for command in ("shift", "saturate", "membership", "typical", "mapspace", "scenario"):
        assert command in output


def test_cli_version() -> None:
    """Test CLI --version flag."""
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    output = _strip_ansi(result.stdout)
    assert "version" in output
    assert __version__ in output
    assert "Finite-level computations for GL-varieties" in output


def test_cli_version_short() -> None:
    """Test CLI -v flag."""
    result = runner.invoke(app, ["-v"])
    assert result.exit_code == 0
    output = _strip_ansi(result.stdout)
    assert __version__ in output


def test_cli_no_command_shows_help() -> None:
    """Test that a bare invocation prints the banner and help."""
    result = runner.invoke(app, [])
    assert result.exit_code == 0
    output = _strip_ansi(result.stdout)
    assert "Finite-level computations for GL-varieties" in output
    assert "scenario" in output


def test_cli_verbose() -> None:
    """Test that -V does not disturb command output."""
    result = runner.invoke(app, ["-V", "dim", "[1]", "--level", "2"])
    assert result.exit_code == 0
    assert _strip_ansi(result.stdout).strip().endswith("2")


def test_cli_unknown_command() -> None:
    """Test that an unknown command is a usage error."""
    result = runner.invoke(app, ["frobnicate"])
    assert result.exit_code == 2
