"""Console, output and input helpers shared by the CLI commands."""

import functools
import json
import logging
import sys
from typing import Any, Callable

import click
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from src.ideals.models import CertificateError
from src.logic.models import LogicError
from src.rings.models import (
    AlgebraError,
    ReducednessError,
    SearchBudgetError,
    UnsupportedRingError,
)
from src.rings.presentation import RingElem, RingPresentation
from .models import CommandRequest, ExitCode, OutputFormat

logger = logging.getLogger(__name__)

# Global Rich console instance
console = Console()


def emit(request: CommandRequest, record: dict[str, Any], pretty: list[str]) -> None:
    """Print one structured JSON line, or the pretty lines on the console."""
    if request.output == OutputFormat.STRUCTURED:
        click.echo(json.dumps({"command": request.subcommand, **record}, ensure_ascii=False))
        return
    for line in pretty:
        console.print(line, highlight=False)


def finish(code: ExitCode) -> None:
    sys.exit(int(code))


def exit_code_for(error: Exception) -> ExitCode:
    """Map library exceptions to exit codes."""
    if isinstance(error, (UnsupportedRingError, ReducednessError, SearchBudgetError)):
        return ExitCode.UNKNOWN
    if isinstance(error, CertificateError):
        return ExitCode.NEGATIVE
    if isinstance(error, (AlgebraError, LogicError, ValidationError, ValueError, OSError)):
        return ExitCode.INPUT_ERROR
    if isinstance(error, click.ClickException):
        return ExitCode.INPUT_ERROR
    return ExitCode.UNKNOWN


def handle_errors(f: Callable) -> Callable:
    """Report library errors on the console and exit with the mapped code."""

    @functools.wraps(f)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return f(*args, **kwargs)
        except click.exceptions.Exit:
            raise
        except Exception as e:
            code = exit_code_for(e)
            console.print(f"[red]{type(e).__name__}:[/red] {escape(str(e))}", highlight=False)
            if code == ExitCode.UNKNOWN and not isinstance(e, AlgebraError):
                logger.exception("Command failed")
            sys.exit(int(code))

    return wrapper


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(current).strip())
            current = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        current.append(ch)
    parts.append("".join(current).strip())
    return [p for p in parts if p]


def parse_generators(ring: RingPresentation, text: str) -> list[RingElem]:
    """Elements of an open written "D(2),D(3)", "D(2, 3)" or "2, 3"."""
    elements = []
    for part in split_top_level(text):
        if part.startswith("D(") and part.endswith(")"):
            elements.extend(ring.parse_element(x) for x in split_top_level(part[2:-1]))
        else:
            elements.append(ring.parse_element(part))
    return elements


def parse_bindings(ring: RingPresentation, bindings: tuple[str, ...]) -> dict[str, RingElem]:
    """--var x=3 style assignments."""
    env = {}
    for binding in bindings:
        name, sep, value = binding.partition("=")
        if not sep or not name.strip():
            raise click.BadParameter(f"Expected name=value, got {binding!r}")
        env[name.strip()] = ring.parse_element(value.strip())
    return env


def show(vector: list[RingElem]) -> str:
    return "(" + ", ".join(str(x) for x in vector) + ")"
