"""Main CLI entry point for dirac-gauge-lab."""

import os

import click
from rich.console import Console
from rich.text import Text

from ..utils.logging import get_console
from .commands.converge import converge
from .commands.sweep import sweep
from .commands.verify import verify
from .utils import get_version


def print_banner(console: Console) -> None:
    """Print ASCII art banner using Rich.

    Args:
        console: Rich console instance for output

    """
    if os.environ.get("DIRAC_LAB_NO_BANNER"):
        return

    line0 = Text()
    line0.append(" ●━━●━━●━━● ", style="#EB088A bold")
    line0.append("  dirac-gauge-lab ", style="white bold")
    line0.append(f"v{get_version()}", style="bright_black")

    line1 = Text()
    line1.append(" ┃  ┃  ┃  ┃ ", style="#EB088A bold")
    line1.append("  1+1D lattice Dirac field", style="cyan")

    line2 = Text()
    line2.append(" ●━━●━━●━━● ", style="#EB088A bold")
    line2.append("  gauge invariance and the vacuum bound", style="bright_black")

    console.print()
    console.print(line0)
    console.print(line1)
    console.print(line2)
    console.print()


def version_callback(ctx: click.Context, param: click.Parameter, value: bool) -> None:
    """Show version and exit.

    Args:
        ctx: Click context
        param: Click parameter (unused)
        value: Whether --version flag was provided

    """
    if not value or ctx.resilient_parsing:
        return
    click.echo(f"dirac-gauge-lab {get_version()}")
    ctx.exit()


@click.group(
    invoke_without_command=True,
    help="Lattice Dirac-field laboratory for gauge invariance and the free field energy bound",
)
@click.option(
    "--version",
    is_flag=True,
    callback=version_callback,
    expose_value=False,
    is_eager=True,
    help="Show version and exit",
)
@click.option(
    "--no-banner",
    is_flag=True,
    help="Disable ASCII art banner",
)
@click.pass_context
def cli(ctx: click.Context, no_banner: bool) -> None:
    """dirac-gauge-lab - gauge checks on a regulated Dirac field.

    Runs the identity checks, the current-divergence sweep and the
    refinement studies from a YAML run configuration.

    Use 'dirac-gauge-lab COMMAND --help' for command-specific help.
    """
    ctx.ensure_object(dict)
    ctx.obj["no_banner"] = no_banner

    if ctx.invoked_subcommand is None:
        console = get_console()
        if not no_banner:
            print_banner(console)
        click.echo(ctx.get_help())


cli.add_command(verify)
cli.add_command(sweep)
cli.add_command(converge)


if __name__ == "__main__":
    cli()
