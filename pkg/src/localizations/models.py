"""Elements of A[f^-1] and equality/invertibility witnesses."""

from pydantic import BaseModel, Field

from src.ideals.models import MembershipCertificate
from src.rings.models import MixedRingError
from src.rings.presentation import RingElem, RingPresentation


class LocalizedElem:
    """numerator / base^exponent in A[base^-1].

    No canonical form is attempted; equality is the semantic test ``loc_equal``.
    """

    __slots__ = ("base", "numerator", "exponent")

    def __init__(self, base: RingElem, numerator: RingElem, exponent: int = 0):
        if exponent < 0:
            raise ValueError(f"Denominator exponent must be non-negative, got {exponent}")
        if base.ring != numerator.ring:
            raise MixedRingError("Numerator and base live in different rings")
        self.base = base
        self.numerator = numerator
        self.exponent = exponent

    def __repr__(self) -> str:
        return f"LocalizedElem({self})"

    @classmethod
    def of(cls, base: RingElem, value) -> "LocalizedElem":
        """The image of a ring element (denominator exponent 0)."""
        return cls(base, base.ring.element(value), 0)

    @property
    def ring(self) -> RingPresentation:
        return self.base.ring

    def _check(self, other: "LocalizedElem") -> None:
        if other.ring != self.ring or other.base != self.base:
            raise MixedRingError(
                f"Cannot combine fractions over {self.base} and {other.base}", ring=self.ring.spec
            )

    def __mul__(self, other: "LocalizedElem") -> "LocalizedElem":
        self._check(other)
        return LocalizedElem(
            self.base, self.numerator * other.numerator, self.exponent + other.exponent
        )

    def __add__(self, other: "LocalizedElem") -> "LocalizedElem":
        self._check(other)
        numerator = (
            self.numerator * self.base**other.exponent
            + other.numerator * self.base**self.exponent
        )
        return LocalizedElem(self.base, numerator, self.exponent + other.exponent)

    def __neg__(self) -> "LocalizedElem":
        return LocalizedElem(self.base, -self.numerator, self.exponent)

    def __sub__(self, other: "LocalizedElem") -> "LocalizedElem":
        return self + (-other)

    def __str__(self) -> str:
        num = str(self.numerator)
        base = str(self.base)
        if " " in num:
            num = f"({num})"
        if " " in base:
            base = f"({base})"
        return f"{num} / {base}^{self.exponent}"


class LocalEquality(BaseModel):
    """Outcome of loc_equal: witness N with base^N * (cross difference) = 0."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    equal: bool
    exponent: int | None = Field(default=None, description="N with f^N * d = 0")
    difference: RingElem = Field(description="Cross-multiplied difference d")
    certificate: MembershipCertificate | None = Field(
        default=None, description="f in sqrt((0 : d)) witness"
    )


class LocalInverse(BaseModel):
    """Outcome of loc_invertible: certificate f^n = u * numerator and the inverse."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    invertible: bool
    certificate: MembershipCertificate | None = None
    inverse: LocalizedElem | None = None
