"""Ideal-level commands: saturate."""

from pathlib import Path

import typer
from rich.console import Console

from glvar.cli.common import OrderChoice, emit_json, parse_input, run_guarded
from glvar.polyalg import groebner, ideals_equal, load_ideal, saturate

console = Console()


def saturate_command(
    ideal_file: Path = typer.Option(..., "--ideal", "-i", help="JSON ideal file"),
    by: str = typer.Option(..., "--by", help="Polynomial h to saturate by"),
    order: OrderChoice = typer.Option(OrderChoice.GREVLEX, "--order", help="Order of the printed basis"),
    budget: int | None = typer.Option(
        None, "--budget", envvar="GLVAR_BUDGET", min=1, help="Gröbner step budget"
    ),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Compute the saturation (I : h^∞) and print its reduced Gröbner basis.

    Example:
        $ glvar saturate --ideal data/ideals/shift_rank1_level2.json --by ys_1
    """
    ideal = run_guarded(console, lambda: load_ideal(ideal_file))
    h = parse_input(ideal.ring.parse, by, "--by")
    if not json_output:
        console.print(f"[dim]Saturating {len(ideal)} generators by {h}...[/dim]")
    saturated = run_guarded(console, lambda: saturate(ideal, h, budget))
    basis = run_guarded(console, lambda: groebner(saturated, order.order, budget))
    unchanged = run_guarded(console, lambda: ideals_equal(saturated, ideal, budget))
    polynomials = [p.format(order.order) for p in basis]
    if json_output:
        emit_json(
            "saturate",
            {"ideal": str(ideal_file), "by": str(h), "order": order.value},
            {"basis": polynomials, "ring": list(ideal.ring.variables)},
            {"unit": basis.is_unit, "already_saturated": unchanged, "steps": basis.steps},
        )
        return
    console.print(f"[bold]Saturation by {h}[/bold] ({order.value}, {len(basis)} elements)")
    for p in polynomials:
        console.print(f"  {p}", highlight=False)
    if unchanged:
        console.print("[green]The ideal was already saturated[/green]")
