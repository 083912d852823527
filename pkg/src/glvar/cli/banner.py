"""Banner for the glvar command line."""

from rich.console import Console


def show_banner(console: Console | None = None) -> None:
    """
    Display the glvar banner.

    Args:
        console: Rich Console instance. If None, creates a new one.

    Example:
        >>> from glvar.cli.banner import show_banner
        >>> show_banner()
    """
    if console is None:
        console = Console()

    console.print()
    console.print(
        "   [bold bright_cyan] ██████╗[/] [bold cyan]██╗[/]     "
        "[bold bright_magenta]██╗   ██╗[/] [bold magenta] █████╗[/] [bold bright_yellow]██████╗[/]"
    )
    console.print(
        "   [bold bright_cyan]██╔════╝[/] [bold cyan]██║[/]     "
        "[bold bright_magenta]██║   ██║[/] [bold magenta]██╔══██╗[/] [bold bright_yellow]██╔══██╗[/]"
    )
    console.print(
        "   [bold cyan]██║  ███╗[/] [bold cyan]██║[/]     "
        "[bold magenta]██║   ██║[/] [bold magenta]███████║[/] [bold yellow]██████╔╝[/]"
    )
    console.print(
        "   [bold cyan]██║   ██║[/] [bold cyan]██║[/]     "
        "[bold magenta]╚██╗ ██╔╝[/] [bold magenta]██╔══██║[/] [bold yellow]██╔══██╗[/]"
    )
    console.print(
        "   [bold dim cyan]╚██████╔╝[/] [bold dim cyan]███████╗[/]"
        "[bold dim magenta] ╚████╔╝[/]  [bold dim magenta]██║  ██║[/] [bold dim yellow]██║  ██║[/]"
    )
    console.print()
    console.print("     [dim]Finite-level computations for GL-varieties[/]")
    console.print()
