"""Commands about equivariant maps: closure, membership, factor and typical."""

from pathlib import Path

import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from glvar.cli.common import OrderChoice, emit_json, fraction_text, parse_point, run_guarded, tuple_arg
from glvar.equimap import FactorizationResult, Verdict, factors_through, is_typical, load_map
from glvar.glvariety import image_closure_level, image_membership
from glvar.polyalg import groebner

console = Console()


def closure_command(
    map_file: Path = typer.Option(..., "--map", "-m", help="JSON map file"),
    level: int = typer.Option(..., "--level", "-l", min=1, help="Level n"),
    order: OrderChoice = typer.Option(OrderChoice.GREVLEX, "--order", help="Order of the printed basis"),
    budget: int | None = typer.Option(
        None, "--budget", envvar="GLVAR_BUDGET", min=1, help="Gröbner step budget"
    ),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Equations of the closure of the image of a map at level n.

    Example:
        $ glvar closure --map data/maps/rank1_param.json --level 2
    """
    f = run_guarded(console, lambda: load_map(map_file))
    if not json_output:
        console.print(f"[dim]Eliminating inputs of {escape(str(f))} at level {level}...[/dim]")
    variety = run_guarded(console, lambda: image_closure_level(f, level, budget))
    basis = run_guarded(console, lambda: groebner(variety.ideal, order.order, budget))
    polynomials = [p.format(order.order) for p in basis]
    dimension = run_guarded(console, lambda: variety.dimension(budget))
    if json_output:
        emit_json(
            "closure",
            {"map": str(map_file), "level": level, "order": order.value},
            {"coordinates": list(variety.coordinates), "basis": polynomials},
            {"dimension": dimension, "ambient": variety.ambient_dimension, "level": level},
        )
        return
    console.print(
        f"[bold]Image closure at level {level}[/bold]: dimension {dimension} "
        f"in {variety.ambient_dimension} coordinates"
    )
    if not polynomials:
        console.print("  (zero ideal: the image is dense)")
    for p in polynomials:
        console.print(f"  {p}", highlight=False)
    console.print(f"[dim]Level-{level} evidence only[/dim]")


def membership_command(
    map_file: Path = typer.Option(..., "--map", "-m", help="JSON map file"),
    level: int = typer.Option(..., "--level", "-l", min=1, help="Level n"),
    point_text: str = typer.Option(..., "--point", "-p", help="Target coordinates, comma-separated"),
    budget: int | None = typer.Option(
        None, "--budget", envvar="GLVAR_BUDGET", min=1, help="Gröbner step budget"
    ),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Decide whether a point lies in the image of a map at level n.

    Example:
        $ glvar membership --map data/maps/phi.json --level 2 --point 1,0,0,0,0
    """
    point = parse_point(point_text)
    f = run_guarded(console, lambda: load_map(map_file))
    result = run_guarded(console, lambda: image_membership(f, point, level, budget))
    witness = (
        {name: fraction_text(v) for name, v in result.witness.items()} if result.witness else None
    )
    if json_output:
        emit_json(
            "membership",
            {"map": str(map_file), "level": level, "point": [fraction_text(v) for v in point]},
            {"status": result.status.value, "witness": witness},
            {"certificate": result.certificate, "level": level},
        )
        return
    style = {"member": "green", "closure_only": "yellow", "non_member": "red"}[result.status.value]
    console.print(f"[bold {style}]{result.status.value}[/bold {style}] at level {level}")
    console.print(f"[dim]{result.certificate}[/dim]")
    if witness:
        nonzero = {k: v for k, v in witness.items() if v != "0"}
        console.print("Preimage: " + (", ".join(f"{k}={v}" for k, v in nonzero.items()) or "0"), highlight=False)


def _result_json(result: FactorizationResult) -> dict[str, object]:
    output: dict[str, object] = {
        "mid": str(result.mid),
        "verdict": result.verdict.value,
        "certificate": result.certificate.value,
        "detail": result.detail,
        "unknowns": result.unknowns,
    }
    if result.level is not None:
        output["level"] = result.level
    if result.witness is not None:
        output["gamma"] = str(result.witness.gamma)
        output["delta"] = str(result.witness.delta)
    return output


def factor_command(
    map_file: Path = typer.Option(..., "--map", "-m", help="JSON map file"),
    through: str = typer.Option(..., "--through", "-t", help="Pure single-row tuple to factor through"),
    budget: int | None = typer.Option(
        None, "--budget", envvar="GLVAR_BUDGET", min=1, help="Gröbner step budget"
    ),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Decide whether a map factors through A^mid.

    Example:
        $ glvar factor --map data/maps/phi1.json --through "[[2],[2],[2]]"
    """
    mid = tuple_arg(through, "--through")
    f = run_guarded(console, lambda: load_map(map_file))
    if not json_output:
        console.print(f"[dim]Checking {escape(str(f))} against {escape(str(mid))}...[/dim]")
    result = run_guarded(console, lambda: factors_through(f, mid, budget))
    if json_output:
        emit_json(
            "factor",
            {"map": str(map_file), "through": str(mid)},
            _result_json(result),
            {"verdict": result.verdict.value, "certificate": result.certificate.value},
        )
        return
    style = {Verdict.YES: "green", Verdict.NO: "red", Verdict.UNKNOWN: "yellow"}[result.verdict]
    console.print(f"[bold {style}]{result.verdict.value}[/bold {style}] ({result.certificate.value})")
    console.print(escape(result.detail), highlight=False)


def typical_command(
    map_file: Path = typer.Option(..., "--map", "-m", help="JSON map file"),
    budget: int | None = typer.Option(
        None, "--budget", envvar="GLVAR_BUDGET", min=1, help="Gröbner step budget"
    ),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Decide whether a map factors through no proper subtuple of its source.

    Example:
        $ glvar typical --map data/maps/phi0.json
        typical
    """
    f = run_guarded(console, lambda: load_map(map_file))
    if not json_output:
        console.print(f"[dim]Checking proper subtuples of {escape(str(f.source_tuple))}...[/dim]")
    result = run_guarded(console, lambda: is_typical(f, budget))
    if json_output:
        emit_json(
            "typical",
            {"map": str(map_file)},
            {
                "verdict": result.verdict.value,
                "witness": str(result.witness) if result.witness is not None else None,
                "checks": [_result_json(c) for c in result.checks],
            },
            {str(c.mid): c.certificate.value for c in result.checks},
        )
        return
    table = Table(title="Factorization checks", show_header=True, header_style="bold")
    table.add_column("Subtuple", style="cyan")
    table.add_column("Verdict", justify="center")
    table.add_column("Certificate")
    for c in result.checks:
        table.add_row(escape(str(c.mid)), c.verdict.value, escape(c.detail or c.certificate.value))
    console.print(table)
    console.print(result.verdict.value, highlight=False)
