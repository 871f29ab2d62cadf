"""Ideals, membership certificates and their serialized records."""

from typing import Iterator

from pydantic import BaseModel, Field

from src.rings.models import AlgebraError
from src.rings.presentation import RingElem, RingPresentation


class Ideal:
    """A finitely generated ideal, given by generators in normal form.

    The empty generator list denotes the zero ideal. Generators keep their
    order because certificates refer to them by index. Equality is
    representational; use ``ideals_equal`` for equality as ideals.
    """

    __slots__ = ("ring", "generators")

    def __init__(self, ring: RingPresentation, generators=()):
        self.ring = ring
        self.generators: tuple[RingElem, ...] = tuple(ring.element(g) for g in generators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.ring, self.generators))

    def __repr__(self) -> str:
        return f"Ideal({self.ring.spec}: {self})"

    @classmethod
    def unit(cls, ring: RingPresentation) -> "Ideal":
        return cls(ring, [ring.one])

    @classmethod
    def zero(cls, ring: RingPresentation) -> "Ideal":
        return cls(ring, [])

    def __iter__(self) -> Iterator[RingElem]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, index: int) -> RingElem:
        return self.generators[index]

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.generators + other.generators)

    def deduplicated(self) -> "Ideal":
        """Drop zero generators and repeated normal forms, keeping first occurrences."""
        seen: list[RingElem] = []
        for g in self.generators:
            if not g.is_zero and g not in seen:
                seen.append(g)
        return Ideal(self.ring, seen)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


class CofactorTerm(BaseModel):
    """One summand u_k * g_{i_k} of a membership certificate."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    cofactor: RingElem = Field(description="The cofactor u_k")
    index: int = Field(ge=0, description="Index i_k into the generator list")


class MembershipCertificate(BaseModel):
    """Witness f^n = u_1 g_{i_1} + ... + u_m g_{i_m}.

    Verifiable by ring arithmetic alone, see ``verify_membership``.
    """

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    element: RingElem = Field(description="The element f")
    exponent: int = Field(ge=1, description="Exponent n")
    cofactors: list[CofactorTerm] = Field(default_factory=list)

    def to_record(self, ideal: Ideal) -> "CertificateRecord":
        return CertificateRecord(
            ring=ideal.ring.spec,
            element=str(self.element),
            generators=[str(g) for g in ideal.generators],
            exponent=self.exponent,
            cofactors=[(str(t.cofactor), t.index) for t in self.cofactors],
        )

    def describe(self, ideal: Ideal) -> str:
        """Human-readable identity, e.g. ``1^1 = 2*2 + 1*3``."""
        lhs = f"{_wrap(str(self.element))}^{self.exponent}"
        if not self.cofactors:
            return f"{lhs} = 0"
        terms = [
            f"{_wrap(str(t.cofactor))}*{_wrap(str(ideal.generators[t.index]))}"
            for t in self.cofactors
        ]
        return f"{lhs} = " + " + ".join(terms)


def _wrap(text: str) -> str:
    if any(c in text for c in " +") or text.startswith("-"):
        return f"({text})"
    return text


class CertificateRecord(BaseModel):
    """Structured text form of a membership certificate."""

    kind: str = "membership"
    ring: str = Field(description="Canonical ring description")
    element: str = Field(description="Canonical printing of f")
    generators: list[str] = Field(description="Canonical printing of the generators")
    exponent: int = Field(ge=1)
    cofactors: list[tuple[str, int]] = Field(default_factory=list)

    def restore(self) -> tuple[RingPresentation, Ideal, MembershipCertificate]:
        """Re-parse the record into live objects (ring, ideal, certificate)."""
        from src.rings.parser import make_ring

        ring = make_ring(self.ring)
        ideal = Ideal(ring, [ring.parse_element(g) for g in self.generators])
        certificate = MembershipCertificate(
            element=ring.parse_element(self.element),
            exponent=self.exponent,
            cofactors=[
                CofactorTerm(cofactor=ring.parse_element(u), index=i) for u, i in self.cofactors
            ],
        )
        return ring, ideal, certificate


class SaturationResult(BaseModel):
    """Annihilator (0 : x) and its stabilized saturation (0 : x^inf)."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    element: RingElem
    annihilator: Ideal = Field(description="(0 : x)")
    saturation: Ideal = Field(description="(0 : x^k) at the first k where the chain stabilizes")
    steps: int = Field(ge=1, description="Number of quotient computations performed")


class CertificateError(AlgebraError):
    """A certificate failed independent re-verification."""

    pass
