"""Result records and certificates of the forcing semantics."""

from enum import Enum

from pydantic import BaseModel, Field

from src.frame.models import LeqCertificate, Open
from src.ideals.models import CertificateError
from src.rings.presentation import RingElem


class Verdict(str, Enum):
    """Tri-state answer of a forcing question."""

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, value: bool) -> "Verdict":
        return cls.TRUE if value else cls.FALSE


class TruthOpen(BaseModel):
    """The largest open forcing a formula, or the reason it is not computed."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    value: Open | None = Field(default=None, description="[[phi]] when known")
    unknown_reason: str | None = Field(
        default=None, description="First subformula the compiler cannot handle"
    )

    @property
    def known(self) -> bool:
        return self.value is not None

    @classmethod
    def unknown(cls, reason: str) -> "TruthOpen":
        return cls(unknown_reason=reason)


class ForcingResult(BaseModel):
    """forces(f, phi) with the leq certificate behind a positive answer."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    verdict: Verdict
    truth: TruthOpen
    certificate: LeqCertificate | None = None
    nilpotency_exponent: int | None = Field(
        default=None, description="k with f^k = 0 when the formula is false"
    )


class Partition(BaseModel):
    """f^exponent = f*g_1 + ... + f*g_m."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    exponent: int = Field(ge=1)
    parts: list[RingElem] = Field(default_factory=list, description="g_1, ..., g_m")


class Witness(BaseModel):
    """numerator / position^exponent in the localization at the branch position."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    numerator: RingElem
    exponent: int = Field(default=0, ge=0)


class BranchCertificate(BaseModel):
    """One branch of a partition: disjunct choice, witness and sub-certificate."""

    model_config = {"arbitrary_types_allowed": True}

    choice: int = Field(default=0, ge=0, description="Disjunct index for disjunctions")
    witness: Witness | None = Field(default=None, description="Value of the bound variable")
    certificate: "ForcingCertificate"


class ForcingCertificate(BaseModel):
    """A tree mirroring the formula.

    Disjunction and existential nodes carry a partition and one branch per
    part; conjunction nodes carry one child per conjunct; atoms, true and
    false carry nothing.
    """

    model_config = {"arbitrary_types_allowed": True}

    partition: Partition | None = None
    branches: list[BranchCertificate] = Field(default_factory=list)
    children: list["ForcingCertificate"] = Field(default_factory=list)


BranchCertificate.model_rebuild()


class ForcingCertificateError(CertificateError):
    """A forcing certificate does not match the shape of its formula."""

    pass
