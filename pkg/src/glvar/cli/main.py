"""Main CLI entry point for glvar."""

import logging

import typer
from rich.console import Console
from rich.logging import RichHandler

from glvar import __version__
from glvar.cli.algebra import saturate_command
from glvar.cli.banner import show_banner
from glvar.cli.combinatorics import dim_command, lr_command, shift_command, sym_command
from glvar.cli.maps import closure_command, factor_command, membership_command, typical_command
from glvar.cli.scenario import scenario_command
from glvar.cli.varieties import delta_command, mapspace_command

app = typer.Typer(
    name="glvar",
    help="Finite-level computations for GL-varieties: tuples, Schur functors, maps and certificates",
    add_completion=False,
    invoke_without_command=True,
    no_args_is_help=False,
)
console = Console()


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        show_banner(console)
        console.print(f"[bold]version[/] {__version__}\n")
        raise typer.Exit()


def configure_logging(verbose: bool) -> None:
    """Route library log records to stderr through Rich."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@app.callback()
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
    verbose: bool = typer.Option(False, "--verbose", "-V", help="Show debug logging on stderr"),
) -> None:
    """
    glvar - GL-varieties, one level at a time.

    Every answer is computed at a finite level n and says so.
    """
    configure_logging(verbose)
    if ctx.invoked_subcommand is None:
        show_banner(console)
        console.print(ctx.get_help())
        raise typer.Exit()


# Register commands
app.command(name="shift")(shift_command)
app.command(name="dim")(dim_command)
app.command(name="lr")(lr_command)
app.command(name="sym")(sym_command)
app.command(name="saturate")(saturate_command)
app.command(name="closure")(closure_command)
app.command(name="membership")(membership_command)
app.command(name="factor")(factor_command)
app.command(name="typical")(typical_command)
app.command(name="delta")(delta_command)
app.command(name="mapspace")(mapspace_command)
app.command(name="scenario")(scenario_command)


if __name__ == "__main__":
    app()
