"""Combinatorial commands: shift, dim, lr and sym.

These never touch Gröbner bases and answer instantly.
"""

import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from glvar.cli.common import emit_json, partition_arg, run_guarded, tuple_arg
from glvar.schur import lr_coefficient, schur_dim, sym_decompose
from glvar.shift import shift_complement, shift_tuple

console = Console()


def shift_command(
    tuple_text: str = typer.Argument(..., metavar="TUPLE", help='Tuple of partitions, e.g. "[[2],[1,1]]"'),
    n: int = typer.Option(1, "--shift", "-n", min=0, help="Number of split-off coordinates"),
    complement: bool = typer.Option(False, "--complement", help="Only the part beyond the tuple itself"),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Compute sh_n(tuple), the tuple of the shifted space.

    Examples:
        $ glvar shift -n 1 "[[2]]"
        [[2],[1],[]]

        $ glvar shift -n 2 "[[2]]" --complement
    """
    t = tuple_arg(tuple_text)
    result = run_guarded(console, lambda: shift_complement(n, t) if complement else shift_tuple(n, t))
    if json_output:
        emit_json(
            "shift",
            {"tuple": str(t), "n": n, "complement": complement},
            str(result),
            {"entries": len(result)},
        )
        return
    console.print(escape(str(result)), highlight=False)


def dim_command(
    lam_text: str = typer.Argument(..., metavar="LAMBDA", help='Partition, e.g. "[2,1]"'),
    level: int = typer.Option(..., "--level", "-l", min=0, help="Level n of K^n"),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Dimension of S_λ(K^n).

    Example:
        $ glvar dim "[2,1]" --level 3
        8
    """
    lam = partition_arg(lam_text)
    value = run_guarded(console, lambda: schur_dim(lam, level))
    if json_output:
        emit_json("dim", {"lambda": str(lam), "level": level}, value, {"method": "hook-content"})
        return
    console.print(str(value), highlight=False)


def lr_command(
    lam_text: str = typer.Argument(..., metavar="LAMBDA", help="Outer partition λ"),
    mu_text: str = typer.Argument(..., metavar="MU", help="First factor μ"),
    nu_text: str = typer.Argument(..., metavar="NU", help="Second factor ν"),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Littlewood-Richardson coefficient c^λ_{μν}.

    Example:
        $ glvar lr "[2,1]" "[1]" "[1,1]"
        1
    """
    lam = partition_arg(lam_text, "LAMBDA")
    mu = partition_arg(mu_text, "MU")
    nu = partition_arg(nu_text, "NU")
    value = run_guarded(console, lambda: lr_coefficient(lam, mu, nu))
    if json_output:
        emit_json(
            "lr",
            {"lambda": str(lam), "mu": str(mu), "nu": str(nu)},
            value,
            {"method": "lr-tableaux"},
        )
        return
    console.print(str(value), highlight=False)


def sym_command(
    tuple_text: str = typer.Argument(..., metavar="TUPLE", help="Pure tuple t of Sym(V_t)"),
    degree: int = typer.Option(..., "--degree", "-d", min=0, help="Highest degree to decompose"),
    json_output: bool = typer.Option(False, "--json", help="Output results as JSON"),
) -> None:
    """Decompose Sym(V_t) into Schur functors up to a degree.

    Example:
        $ glvar sym "[[1],[1]]" --degree 2
    """
    t = tuple_arg(tuple_text)
    expansion = run_guarded(console, lambda: sym_decompose(t, degree))
    rows = list(expansion.items())
    if json_output:
        emit_json(
            "sym",
            {"tuple": str(t), "degree": degree},
            [{"partition": str(lam), "multiplicity": m} for lam, m in rows],
            {"degree_bound": expansion.degree_bound},
        )
        return
    table = Table(title=f"Sym(V_{escape(str(t))}) up to degree {degree}", show_header=True, header_style="bold")
    table.add_column("Degree", justify="right")
    table.add_column("Partition", style="cyan")
    table.add_column("Multiplicity", justify="right")
    for lam, m in rows:
        table.add_row(str(lam.size), escape(str(lam)), str(m))
    console.print(table)
