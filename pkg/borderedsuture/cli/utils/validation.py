"""Input loading and error reporting shared by the commands."""

import sys
from functools import wraps
from pathlib import Path
from typing import Optional

import click

from borderedsuture.config import ComputeSettings
from borderedsuture.constants import EXIT_FAILURE
from borderedsuture.errors import BorderedError, SchemaError
from borderedsuture.heegaard import bsd_from_nice_diagram
from borderedsuture.io import HEEGAARD, TYPED, load_any, read_data
from borderedsuture.pipeline import FactoredDescription, assemble, load_factored
from borderedsuture.structures import TypeD, ensure_structure

from .logging import logger


def exit_on_error(f):
    """Log a BorderedError and exit with its code."""

    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except BorderedError as e:
            logger.error(f"Error: {e.message}")
            sys.exit(e.exit_code)

    return wrapper


def resolve_settings(mode: Optional[str], seed: Optional[int]) -> ComputeSettings:
    """Flags (and their environment variables) over the config file over defaults."""
    try:
        return ComputeSettings.from_config().override(mode=mode, seed=seed)
    except ValueError as e:
        logger.error(f"Error: {e}")
        sys.exit(EXIT_FAILURE)


def is_factored(data) -> bool:
    return isinstance(data, dict) and "pieces" in data and "schema" not in data


def load_type_d(
    path: Path | str, settings: ComputeSettings, reduce_between: bool = True
) -> tuple[TypeD, list[Path], list[str]]:
    """
    A type D (or DD) structure from a module file, a nice diagram or a
    factored description.

    Returns:
        The structure, the input files it was read from, and the piece labels.
    """
    path = Path(path)
    if is_factored(read_data(path)):
        description: FactoredDescription = load_factored(path)
        d = assemble(description, settings, reduce_between)
        return d, [path, *description.inputs], description.describe()

    kind, loaded = load_any(path)
    if kind == TYPED:
        d = ensure_structure(loaded)
    elif kind == HEEGAARD:
        d = bsd_from_nice_diagram(loaded)
    else:
        raise SchemaError(f"{path} holds a {kind}, not a type D structure")
    if d.name is None:
        d.name = path.stem
    return d, [path], [f"{kind}:{path.name}"]


def emit(text: str, out: Optional[str]) -> None:
    """Write a report to --out, or to stdout."""
    if out is None:
        click.echo(text, nl=False)
        return
    with open(out, "w") as f:
        f.write(text)
    logger.info(f"Wrote {out}")
