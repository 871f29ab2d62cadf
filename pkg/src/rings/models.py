"""Pydantic models, enums and exceptions for ring presentations."""

from enum import Enum

from pydantic import BaseModel, Field


class RingKind(str, Enum):
    """Supported families of computable commutative rings."""

    INTEGERS = "integers"
    MODULAR_INTEGERS = "modular_integers"
    POLYNOMIAL_QUOTIENT = "polynomial_quotient"


class CoefficientField(str, Enum):
    """Coefficient fields for polynomial presentations."""

    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"


class Reducedness(str, Enum):
    """Tri-state knowledge about whether the nilradical is zero."""

    KNOWN_REDUCED = "known_reduced"
    KNOWN_NON_REDUCED = "known_non_reduced"
    UNKNOWN = "unknown"


class ArithOp(str, Enum):
    """Ring operations exposed through arith()."""

    ADD = "add"
    MUL = "mul"
    NEG = "neg"
    SUB = "sub"
    POW = "pow"


class NilpotencyWitness(BaseModel):
    """Witness that element^exponent normalizes to zero.

    Attributes:
        element: Canonical printing of the nilpotent element
        exponent: k with element^k = 0
    """

    element: str = Field(description="Canonical printing of the element")
    exponent: int = Field(ge=1, description="Exponent k with element^k = 0")


class AlgebraError(Exception):
    """Base exception for ring and ideal computations.

    Attributes:
        message: Error description
        ring: Canonical ring description the error relates to (if any)
        original_error: The underlying exception (if any)
    """

    def __init__(
        self,
        message: str,
        ring: str | None = None,
        original_error: Exception | None = None,
    ):
        self.message = message
        self.ring = ring
        self.original_error = original_error
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.ring:
            return f"{self.message} (ring {self.ring})"
        return self.message


class RingParseError(AlgebraError):
    """Malformed ring description or element literal."""

    pass


class MixedRingError(AlgebraError):
    """Operands belong to different rings."""

    pass


class UnsupportedRingError(AlgebraError):
    """Operation is not available for this ring kind."""

    pass


class ReducednessError(AlgebraError):
    """A reducedness assertion contradicts a computed nilpotent."""

    pass


class SearchBudgetError(AlgebraError):
    """A configured search budget was exhausted before an answer was found."""

    pass
