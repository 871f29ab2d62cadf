"""Opens of Spec(A), represented by finite generator lists."""

from pydantic import BaseModel, Field

from src.ideals.models import Ideal, MembershipCertificate
from src.rings.presentation import RingElem, RingPresentation


class Open:
    """The radical ideal sqrt(G) for a finite generator list G.

    ``==`` is representational only. Compare opens as opens with
    ``frame.operations.equal``, which is extensional.
    """

    __slots__ = ("support",)

    def __init__(self, support: Ideal):
        self.support = support

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Open):
            return NotImplemented
        return self.support == other.support

    def __hash__(self) -> int:
        return hash(self.support)

    def __repr__(self) -> str:
        return f"Open({self.ring.spec}: {self})"

    @property
    def ring(self) -> RingPresentation:
        return self.support.ring

    @property
    def generators(self) -> tuple[RingElem, ...]:
        return self.support.generators

    @classmethod
    def top(cls, ring: RingPresentation) -> "Open":
        return cls(Ideal.unit(ring))

    @classmethod
    def bottom(cls, ring: RingPresentation) -> "Open":
        return cls(Ideal.zero(ring))

    @classmethod
    def generated_by(cls, ring: RingPresentation, generators) -> "Open":
        return cls(Ideal(ring, generators))

    def __str__(self) -> str:
        return "D(" + ", ".join(str(g) for g in self.generators) + ")"


class LeqCertificate(BaseModel):
    """One radical-membership certificate per generator of the smaller open."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    lower: Open = Field(description="The open U")
    upper: Open = Field(description="The open V")
    certificates: list[MembershipCertificate] = Field(
        description="certificates[i] witnesses U.generators[i] in sqrt(V.support)"
    )

    def describe(self) -> list[str]:
        return [c.describe(self.upper.support) for c in self.certificates]
