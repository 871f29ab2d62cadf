"""Records of the brute-force oracles and the coherent prover."""

from dataclasses import dataclass

from pydantic import BaseModel, Field, model_validator

from src.logic.derivation import Derivation
from src.logic.models import LogicError
from src.logic.syntax import Formula, Sequent
from src.rings.presentation import RingElem, RingPresentation


def filter_violation(ring: RingPresentation, carrier: frozenset[int]) -> str | None:
    """The first prime-filter axiom the subset breaks, or None."""
    n = ring.modulus
    if 0 % n in carrier:
        return "contains 0"
    if 1 % n not in carrier:
        return "does not contain 1"
    for x in range(n):
        for y in range(n):
            if (x + y) % n in carrier and x not in carrier and y not in carrier:
                return f"{x} + {y} is in the filter but neither summand is"
            if ((x * y) % n in carrier) != (x in carrier and y in carrier):
                return f"{x} * {y} breaks multiplicative saturation"
    return None


class PrimeFilter(BaseModel):
    """A prime filter of a finite ring, checked against the axioms on construction."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    ring: RingPresentation
    carrier: frozenset[int] = Field(description="Residues of the filter's elements")

    @model_validator(mode="after")
    def _check_axioms(self) -> "PrimeFilter":
        if reason := filter_violation(self.ring, self.carrier):
            raise ValueError(f"Not a prime filter of {self.ring.spec}: {reason}")
        return self

    def __contains__(self, x: RingElem | int) -> bool:
        value = x.value if isinstance(x, RingElem) else x % self.ring.modulus
        return int(value) in self.carrier

    @property
    def prime_ideal(self) -> frozenset[int]:
        """The complement, a prime ideal."""
        return frozenset(range(self.ring.modulus)) - self.carrier

    def __str__(self) -> str:
        return "{" + ", ".join(str(x) for x in sorted(self.carrier)) + "}"


@dataclass(frozen=True)
class ProofResult:
    """Outcome of a coherent-prover query.

    Attributes:
        provable: Whether every consistent branch reaches the goal
        derivation: Checkable derivation when requested and provable
        leaves: Consistent saturated branches explored
        failing_branch: Atoms of a saturated branch that misses the goal
    """

    provable: bool
    derivation: Derivation | None = None
    leaves: int = 0
    failing_branch: list[Formula] | None = None


class TheoryError(LogicError):
    """An axiom or goal lies outside the propositional coherent fragment."""

    pass


@dataclass(frozen=True)
class EntailmentChain:
    """A leq certificate rewritten as a derivation over the prime-filter theory.

    ``theory`` holds the axiom instances over the symbols the chain uses.
    """

    sequent: Sequent
    theory: list[Sequent]
    derivation: Derivation
