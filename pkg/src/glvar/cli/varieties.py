"""Commands about level families: delta and mapspace."""

from pathlib import Path

import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from glvar.cli.common import OrderChoice, emit_json, fraction_text, parse_range, run_guarded, tuple_arg
from glvar.glvariety import delta_range, fit_delta, load_family, mapping_space
from glvar.polyalg import groebner

console = Console()


def delta_command(
    family_file: Path = typer.Option(..., "--family", "-f", help="JSON family file"),
    range_text: str = typer.Option(..., "--range", "-r", help="Levels a..b"),
    fit_text: str | None = typer.Option(
        None, "--fit", help="Fit levels a..b; the --range levels above them are the test levels"
    ),
    workers: int | None = typer.Option(
        None, "--workers", "-w", envvar="GLVAR_WORKERS", min=1, help="Worker processes"
    ),
    budget: int | None = typer.Option(
        None, "--budget", envvar="GLVAR_BUDGET", min=1, help="Gröbner step budget"
    ),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Dimension function δ(d) = dim X{K^d} over a range of levels.

    Examples:
        $ glvar delta --family data/families/rank1.json --range 1..4

        $ glvar delta --family data/families/a2.json --range 2..5 --fit 2..4
    """
    levels = parse_range(range_text)
    X = run_guarded(console, lambda: load_family(family_file))
    if not json_output:
        console.print(f"[dim]Computing dimensions of {escape(str(X))}...[/dim]")
    if fit_text is None:
        values = run_guarded(console, lambda: delta_range(X, levels, workers, budget))
        if json_output:
            emit_json(
                "delta",
                {"family": str(family_file), "range": range_text},
                {str(d): v for d, v in values.items()},
                {"levels": list(values)},
            )
            return
        _print_values(values)
        return

    fit_levels = parse_range(fit_text, "--fit")
    test_levels = [d for d in levels if d > max(fit_levels)]
    if not test_levels:
        raise typer.BadParameter("--range must reach above the --fit levels", param_hint="--range")
    fit = run_guarded(console, lambda: fit_delta(X, fit_levels, test_levels, budget, workers))
    if json_output:
        emit_json(
            "delta",
            {"family": str(family_file), "range": range_text, "fit": fit_text},
            {
                "polynomial": fit.expression,
                "coefficients": [fraction_text(c) for c in fit.coefficients],
                "fit": {str(d): v for d, v in fit.fit_values.items()},
                "test": {str(d): v for d, v in fit.test_values.items()},
            },
            {
                "agrees": fit.agrees,
                "mismatches": fit.mismatches,
                "degree": fit.degree,
                "degree_bound": fit.degree_bound,
                "within_degree_bound": fit.within_degree_bound,
            },
        )
        return
    _print_values({**fit.fit_values, **fit.test_values})
    console.print(f"δ(d) = [bold]{fit.expression}[/bold]", highlight=False)
    if fit.agrees:
        console.print(f"[green]Agrees on test levels {', '.join(map(str, fit.test_values))}[/green]")
    else:
        console.print(f"[red]Disagrees at levels {', '.join(map(str, fit.mismatches))}[/red]")
    if not fit.within_degree_bound:
        console.print(f"[yellow]Degree {fit.degree} exceeds the tuple degree {fit.degree_bound}[/yellow]")


def _print_values(values: dict[int, int]) -> None:
    table = Table(show_header=True, header_style="bold")
    table.add_column("d", justify="right")
    table.add_column("δ(d)", justify="right")
    for d, v in values.items():
        table.add_row(str(d), str(v))
    console.print(table)


def mapspace_command(
    source: str = typer.Option(..., "--source", "-s", help="Pure single-row source tuple"),
    family_file: Path = typer.Option(..., "--family", "-f", help="JSON family file"),
    level: int = typer.Option(3, "--level", "-l", min=1, help="Level N (N + 1 is checked too)"),
    order: OrderChoice = typer.Option(OrderChoice.GREVLEX, "--order", help="Order of the printed basis"),
    budget: int | None = typer.Option(
        None, "--budget", envvar="GLVAR_BUDGET", min=1, help="Gröbner step budget"
    ),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Equations of the space of equivariant maps A^source -> X.

    Example:
        $ glvar mapspace --source "[[1]]" --family data/families/rank1.json
    """
    lam = tuple_arg(source, "--source")
    X = run_guarded(console, lambda: load_family(family_file))
    if not json_output:
        console.print(f"[dim]Pulling back equations at levels {level} and {level + 1}...[/dim]")
    result = run_guarded(console, lambda: mapping_space(lam, X, level, budget))
    basis = run_guarded(console, lambda: groebner(result.ideal, order.order, budget))
    polynomials = [p.format(order.order) for p in basis]
    if json_output:
        emit_json(
            "mapspace",
            {"source": str(lam), "family": str(family_file), "level": level, "order": order.value},
            {"symbols": list(result.symbols), "basis": polynomials, "dimension": result.dimension},
            {"level": level, "stabilized": result.stabilized},
        )
        return
    console.print(
        f"[bold]{len(result.symbols)} coefficient symbols[/bold]: {', '.join(result.symbols) or '(none)'}",
        highlight=False,
    )
    if not polynomials:
        console.print("  (zero ideal)")
    for p in polynomials:
        console.print(f"  {p}", highlight=False)
    console.print(f"Dimension {result.dimension} at level {level}")
    if result.stabilized:
        console.print(f"[green]Stabilized: levels {level} and {level + 1} agree[/green]")
    else:
        console.print(f"[yellow]Not stabilized between levels {level} and {level + 1}[/yellow]")
