"""Helpers shared by the CLI commands: input parsing, error exits, JSON reports."""

import json
from collections.abc import Callable
from enum import Enum
from fractions import Fraction
from typing import Any, NoReturn, TypeVar

import typer
from rich.console import Console
from rich.markup import escape

from glvar.exceptions import GlvarError
from glvar.partitions import Partition, PartitionSyntaxError, PartitionTuple, parse_partition, parse_tuple
from glvar.polyalg import GREVLEX, LEX, MonomialOrder, PolynomialSyntaxError, UnknownVariableError

T = TypeVar("T")

SYNTAX_ERRORS = (PartitionSyntaxError, PolynomialSyntaxError, UnknownVariableError)


class OrderChoice(str, Enum):
    """Monomial orders selectable from the command line."""

    GREVLEX = "grevlex"
    LEX = "lex"

    @property
    def order(self) -> MonomialOrder:
        return GREVLEX if self is OrderChoice.GREVLEX else LEX


def parse_input(parser: Callable[[str], T], text: str, param: str) -> T:
    """Run a parser, turning syntax errors into usage errors (exit code 2)."""
    try:
        return parser(text)
    except SYNTAX_ERRORS as e:
        raise typer.BadParameter(str(e), param_hint=param) from None
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint=param) from None


def partition_arg(text: str, param: str = "LAMBDA") -> Partition:
    return parse_input(parse_partition, text, param)


def tuple_arg(text: str, param: str = "TUPLE") -> PartitionTuple:
    return parse_input(parse_tuple, text, param)


def parse_range(text: str, param: str = "--range") -> list[int]:
    """Parse ``a..b`` (inclusive) or a single level.

    Example:
        >>> parse_range("2..4")
        [2, 3, 4]

    """
    start, sep, stop = text.partition("..")
    try:
        low = int(start)
        high = int(stop) if sep else low
    except ValueError:
        raise typer.BadParameter(f"Expected a range like 2..5, got {text!r}", param_hint=param) from None
    if low < 1 or high < low:
        raise typer.BadParameter(f"Expected 1 <= a <= b, got {text!r}", param_hint=param)
    return list(range(low, high + 1))


def parse_point(text: str, param: str = "--point") -> list[Fraction]:
    """Parse comma-separated rationals such as ``1,0,-1/2``."""
    try:
        return [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError):
        raise typer.BadParameter(f"Expected comma-separated rationals, got {text!r}", param_hint=param) from None


def fail(console: Console, error: Exception) -> NoReturn:
    """Print a computation error and exit with code 1."""
    console.print(f"[red]Error: {escape(str(error))}[/red]", highlight=False)
    raise typer.Exit(code=1) from None


def run_guarded(console: Console, fn: Callable[[], T]) -> T:
    """Call ``fn``, converting library errors into exit code 1."""
    try:
        return fn()
    except SYNTAX_ERRORS as e:
        raise typer.BadParameter(str(e)) from None
    except (GlvarError, ValueError) as e:
        fail(console, e)


def fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def emit_json(command: str, inputs: dict[str, Any], result: Any, certificates: dict[str, Any]) -> None:
    """Print a report with the stable schema {command, inputs, result, certificates}."""
    output = {"command": command, "inputs": inputs, "result": result, "certificates": certificates}
    # Plain print keeps ANSI codes out of machine-readable output
    print(json.dumps(output, indent=2))
