"""Requests and exit codes of the command-line surface."""

from enum import Enum, IntEnum

from pydantic import BaseModel, Field, field_validator


class ExitCode(IntEnum):
    """Process exit status of every command."""

    AFFIRMATIVE = 0
    NEGATIVE = 1
    UNKNOWN = 2
    INPUT_ERROR = 3


class OutputFormat(str, Enum):
    PRETTY = "pretty"
    STRUCTURED = "structured"


COMMANDS = (
    "entails",
    "truth-open",
    "force",
    "nabla-translate",
    "check-derivation",
    "prove",
    "filters",
    "mccoy",
    "richman",
    "generic-freeness",
    "selftest",
    "verify-certificate",
)


class CommandRequest(BaseModel):
    """A validated command invocation.

    Attributes:
        subcommand: One of COMMANDS
        ring: Ring description text, when the command takes one
        payload: Formula, sequent, matrix or file path, depending on the command
        output: pretty (rich console) or structured (one JSON record per line)
    """

    subcommand: str
    ring: str | None = None
    payload: list[str] = Field(default_factory=list)
    output: OutputFormat = OutputFormat.PRETTY

    @field_validator("subcommand")
    @classmethod
    def _known(cls, value: str) -> str:
        if value not in COMMANDS:
            raise ValueError(f"Unknown command {value!r}")
        return value

    @field_validator("ring")
    @classmethod
    def _non_empty(cls, value: str | None) -> str | None:
        if value is not None and not value.strip():
            raise ValueError("Ring description is empty")
        return value
