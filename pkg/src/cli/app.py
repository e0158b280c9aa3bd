"""CLI application definition for GAFSV."""

import importlib
import logging
import sys
from collections.abc import Sequence
from types import ModuleType
from typing import Annotated, Optional

import typer

from src.cli.commands import dump_image, encode, eval_command, gradcheck, stats, synth, train
from src.constants import VERSION

USAGE_EXIT = 1

app = typer.Typer(
    add_completion=False,
    help="Asymmetric GAF signature verification - synthesise, encode, train and evaluate.",
    no_args_is_help=True,
)


def version_callback(value: bool) -> None:
    if value:
        typer.echo(f"gafsv v{VERSION}")
        raise typer.Exit()


@app.callback()
def main_options(
    verbose: Annotated[bool, typer.Option("--verbose", help="Enable verbose debug output")] = False,
    version: Annotated[
        Optional[bool],
        typer.Option("--version", callback=version_callback, is_eager=True, help="Show version and exit."),
    ] = None,
) -> None:
    """Global options."""
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.WARNING)


# Register commands
app.command(name="synth", help="Generate a synthetic signature dataset")(synth)
app.command(name="encode", help="Encode signatures into GAF6 stacks")(encode)
app.command(
    name="train", help="Train the embedding network (float64 by default, saved as a GAFW v2 checkpoint)"
)(train)
app.command(name="eval", help="Evaluate a checkpoint on the held-out writers")(eval_command)
app.command(name="gradcheck", help="Check gradients against finite differences")(gradcheck)
app.command(name="dump-image", help="Write one GAF6 channel as a PGM image")(dump_image)
app.command(name="stats", help="Report embedding margins of a checkpoint")(stats)


def click_exceptions() -> ModuleType:
    """The exceptions module of the click that typer runs on (vendored in newer typer)."""
    try:
        return importlib.import_module("typer._click.exceptions")
    except ImportError:
        return importlib.import_module("click.exceptions")


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the process exit code (usage errors map to 1)."""
    args = list(sys.argv[1:] if argv is None else argv)
    errors = click_exceptions()
    try:
        result = app(args=args, prog_name="gafsv", standalone_mode=False)
    except errors.ClickException as e:
        e.show()
        return USAGE_EXIT
    except errors.Abort:
        return USAGE_EXIT
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run())
