"""Scenario command: run a named worked example."""

import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from glvar.cli.common import emit_json, run_guarded
from glvar.scenarios import ScenarioReport, run_scenario, scenario_aliases, scenario_names

console = Console()


def scenario_command(
    name: str = typer.Argument(
        ..., help=f"One of: {', '.join(scenario_names())} (aliases: {', '.join(scenario_aliases())})"
    ),
    verify: bool = typer.Option(False, "--verify", help="Exit with code 1 unless the certificates match"),
    budget: int | None = typer.Option(
        None, "--budget", envvar="GLVAR_BUDGET", min=1, help="Gröbner step budget"
    ),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Run a named scenario and compare it with its expected certificates.

    Examples:
        $ glvar scenario paper-9.5

        $ glvar scenario paper-9.3-mapspace --verify --json

        $ glvar scenario typical-not-open
    """
    if not json_output:
        console.print(f"[dim]Running {name}...[/dim]")
    report = run_guarded(console, lambda: run_scenario(name, budget))
    if json_output:
        emit_json(
            "scenario",
            {"name": report.name, "requested": name, "verify": verify},
            {**report.result, "level": report.level, "stabilized": report.stabilized},
            {"computed": report.certificates, "expected": report.expected, "verified": report.verified},
        )
    else:
        _display(report)
    if verify and not report.verified:
        if not json_output:
            console.print("[red]Error: certificates differ from the expected ones[/red]")
        raise typer.Exit(code=1)


def _display(report: ScenarioReport) -> None:
    table = Table(title=f"Scenario: {report.name}", show_header=True, header_style="bold")
    table.add_column("Certificate", style="cyan")
    table.add_column("Computed")
    table.add_column("Expected")
    table.add_column("", justify="center", min_width=2)
    for key, value in report.certificates.items():
        expected = report.expected.get(key, "")
        mark = "" if not expected else ("[green]✓[/green]" if value == expected else "[red]✗[/red]")
        table.add_row(key, escape(value), escape(expected), mark)
    console.print(table)
    level = "the level of forms" if report.level is None else f"level {report.level}"
    stabilized = "n/a" if report.stabilized is None else ("yes" if report.stabilized else "no")
    console.print(f"[dim]Evidence at {level}; stabilization: {stabilized}[/dim]")
    for key, value in report.result.items():
        if isinstance(value, list) and value:
            console.print(f"[bold]{key}[/bold]")
            for item in value:
                console.print(f"  {escape(str(item))}", highlight=False)
    status = "[green]verified[/green]" if report.verified else "[red]not verified[/red]"
    console.print(status)
