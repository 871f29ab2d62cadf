"""CLI utilities for the radical-frame toolkit."""

from src.cli.models import COMMANDS, CommandRequest, ExitCode, OutputFormat
from src.cli.utils import console, emit, handle_errors

__all__ = ["COMMANDS", "CommandRequest", "ExitCode", "OutputFormat", "console", "emit", "handle_errors"]
