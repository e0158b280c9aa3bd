"""CLI utility functions for GAFSV."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import typer

from src.exceptions import GafsvError
from src.output.protocols import OutputHandler

logger = logging.getLogger(__name__)

DATA_ERROR_EXIT = 2
COMMANDLINE_SOURCE = "COMMANDLINE"


def _sanitize_path(path: Path) -> Path:
    """Return a normalized, absolute version of ``path``."""
    return path.expanduser().resolve()


def command_line_values(ctx: typer.Context, names: Iterator[str] | list[str]) -> dict[str, Any]:
    """Values of the parameters in ``names`` that were typed on the command line.

    Sources are matched by enum name; typer may ship its own click.
    """
    overrides: dict[str, Any] = {}
    for name in names:
        source = ctx.get_parameter_source(name)
        if source is not None and source.name == COMMANDLINE_SOURCE:
            overrides[name] = ctx.params[name]
    return overrides


@contextmanager
def exit_on_error(output: OutputHandler) -> Iterator[None]:
    """Turn library errors into a one-line message and the matching exit code."""
    try:
        yield
    except GafsvError as e:
        logger.debug("Command failed", exc_info=True)
        output.error(str(e))
        raise typer.Exit(code=e.exit_code) from e
    except (OSError, UnicodeDecodeError) as e:
        logger.debug("Command failed", exc_info=True)
        output.error(str(e))
        raise typer.Exit(code=DATA_ERROR_EXIT) from e


def signature_files(root: Path) -> list[Path]:
    """Every ``*.txt`` file under ``root`` in sorted order."""
    return sorted(p for p in root.rglob("*.txt") if p.is_file())
