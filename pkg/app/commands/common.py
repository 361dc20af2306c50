"""
Shared helpers for the click commands: error mapping and output handling.
"""

import functools
import sys
from contextlib import contextmanager
from typing import Iterator, Optional, TextIO

import click

from app.exceptions import DynMISError


class CommandError(click.ClickException):
    """ClickException carrying a DynMISError's exit code."""

    def __init__(self, detail: str, exit_code: int):
        super().__init__(detail)
        self.exit_code = exit_code


def handle_errors(func):
    """Turn DynMISError (and pydantic's ValueError) into a CommandError."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except DynMISError as exc:
            raise CommandError(exc.detail, exc.exit_code) from exc
        except ValueError as exc:
            raise CommandError(str(exc), 2) from exc

    return wrapper


@contextmanager
def output(path: Optional[str]) -> Iterator[TextIO]:
    """`path` opened for writing, or stdout when None or '-'."""
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        yield handle
