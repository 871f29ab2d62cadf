"""Enums, results and exceptions for formulas and derivations."""

from enum import Enum

from pydantic import BaseModel, Field


class Fragment(str, Enum):
    """Syntactic fragment of a formula, smallest first."""

    COHERENT = "coherent"
    GEOMETRIC = "geometric"
    FIRST_ORDER = "first_order"


class Calculus(str, Enum):
    """Rule set a derivation is checked against."""

    GEOMETRIC = "geometric"
    INTUITIONISTIC = "intuitionistic"


class CheckResult(BaseModel):
    """Outcome of check_derivation.

    Attributes:
        ok: Whether every node is a valid rule instance
        path: Premise indices from the root to the first failing node
        rule: Rule name at the failing node
        reason: Why that node was rejected
    """

    ok: bool
    path: list[int] = Field(default_factory=list)
    rule: str | None = None
    reason: str | None = None
    nodes_checked: int = Field(default=0, ge=0)

    def describe(self) -> str:
        if self.ok:
            return f"derivation accepted ({self.nodes_checked} nodes)"
        where = "/".join(str(i) for i in self.path) or "root"
        return f"rejected at {where} [{self.rule}]: {self.reason}"


class LogicError(Exception):
    """Base exception for syntax, translation and derivation problems.

    Attributes:
        message: Error description
        text: The input text being processed (if any)
        position: Character offset of the problem (if known)
    """

    def __init__(self, message: str, text: str | None = None, position: int | None = None):
        self.message = message
        self.text = text
        self.position = position
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.position is not None:
            return f"{self.message} (at offset {self.position})"
        return self.message


class FormulaSyntaxError(LogicError):
    """Malformed formula, term or sequent."""

    pass


class UnboundVariableError(FormulaSyntaxError):
    """Identifier is neither a context variable, a bound variable nor a ring constant."""

    pass


class SortError(FormulaSyntaxError):
    """A variable was declared with a sort other than the ring sort A."""

    pass


class CaptureError(LogicError):
    """Substitution would bind a free variable of the substituted term."""

    pass


class ReservedSymbolError(LogicError):
    """The answer symbol of the nabla translation already occurs in the input."""

    pass


class DerivationFormatError(LogicError):
    """A derivation document does not have the expected shape."""

    pass
