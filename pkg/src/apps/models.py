"""Matrices over finite rings and the certificates the matrix algorithms emit."""

import re
from typing import Callable

from pydantic import BaseModel, Field, model_validator

from src.ideals.models import CertificateError, Ideal
from src.localizations.operations import localize_modular
from src.rings.models import AlgebraError
from src.rings.presentation import RingElem, RingPresentation


class MatrixError(AlgebraError):
    """Ragged rows or a dimension out of range."""

    pass


class OracleCertificateError(CertificateError):
    """An injectivity oracle refused or answered with a certificate that does not verify."""

    def __init__(self, message: str, vector: list[RingElem] | None = None, ring: str | None = None):
        super().__init__(message, ring=ring)
        self.vector = vector


class Matrix(BaseModel):
    """A rows x cols matrix; zero-row matrices keep their column count."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    ring: RingPresentation
    entries: list[list[RingElem]] = Field(default_factory=list)
    cols: int = Field(ge=0)

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: dict) -> dict:
        ring = data["ring"]
        entries = [[ring.element(x) for x in row] for row in data.get("entries", [])]
        if "cols" not in data or data["cols"] is None:
            data["cols"] = len(entries[0]) if entries else 0
        if any(len(row) != data["cols"] for row in entries):
            raise MatrixError("Matrix rows must all have the same length", ring=ring.spec)
        data["entries"] = entries
        return data

    @classmethod
    def parse(cls, ring: RingPresentation, text: str, cols: int | None = None) -> "Matrix":
        """Rows separated by ';', entries by ',' or whitespace: "2 3; 4 5"."""
        rows = [r for r in (part.strip() for part in text.split(";")) if r]
        entries = [[ring.parse_element(x) for x in re.split(r"[,\s]+", r) if x] for r in rows]
        return cls(ring=ring, entries=entries, cols=cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: tuple[int, int]) -> RingElem:
        i, j = index
        return self.entries[i][j]

    def apply(self, vector: list[RingElem]) -> list[RingElem]:
        """M * v."""
        if len(vector) != self.cols:
            raise MatrixError(f"Vector of length {len(vector)} for {self.cols} columns")
        return [sum((a * v for a, v in zip(row, vector)), self.ring.zero) for row in self.entries]

    def kills(self, vector: list[RingElem]) -> bool:
        return all(x.is_zero for x in self.apply(vector))

    def is_zero(self) -> bool:
        return all(x.is_zero for row in self.entries for x in row)

    def map_to(self, ring: RingPresentation) -> "Matrix":
        """Image under Z/n -> Z/m (reduction of residues)."""
        return Matrix(
            ring=ring,
            entries=[[ring.element(int(x.value)) for x in row] for row in self.entries],
            cols=self.cols,
        )

    def submatrix(self, rows: list[int], cols: list[int]) -> "Matrix":
        return Matrix(
            ring=self.ring,
            entries=[[self.entries[i][j] for j in cols] for i in rows],
            cols=len(cols),
        )

    def __str__(self) -> str:
        if not self.entries:
            return f"[0x{self.cols}]"
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.entries) + "]"


class VanishingCertificate(BaseModel):
    """An oracle's claim that a kernel vector is zero."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    vector: list[RingElem]

    def verify(self) -> bool:
        return all(x.is_zero for x in self.vector)


InjectivityOracle = Callable[[list[RingElem]], VanishingCertificate | None]


class VanishingStep(BaseModel):
    """A verified kernel vector together with the oracle's certificate that it vanishes."""

    model_config = {"arbitrary_types_allowed": True, "frozen": True}

    vector: list[RingElem]
    certificate: VanishingCertificate


class EntryNilpotency(BaseModel):
    """M_ij is nilpotent because A[M_ij^-1] is trivial."""

    model_config = {"arbitrary_types_allowed": True}

    row: int
    col: int
    value: RingElem
    exponent: int = Field(ge=1, description="k with value^k = 0")
    localized: "TrivialityCertificate"


class TrivialityCertificate(BaseModel):
    """A proof of 1 = 0 assembled from nilpotent entries and vanishing kernel vectors.

    Closes either through a vanishing vector with a coordinate 1 or through an
    explicit exponent k with 1^k = 0.
    """

    model_config = {"arbitrary_types_allowed": True}

    ring: RingPresentation
    source: str = Field(description="Algorithm that produced the certificate")
    matrix: Matrix | None = Field(default=None, description="Matrix the vanishing steps refer to")
    entries: list[EntryNilpotency] = Field(default_factory=list)
    vanishing: list[VanishingStep] = Field(default_factory=list)
    unit_exponent: int | None = Field(default=None, description="k with 1^k = 0")

    def verify(self) -> bool:
        ring = self.ring
        for entry in self.entries:
            if not (entry.value**entry.exponent).is_zero:
                return False
            if entry.localized.ring != localize_modular(ring, entry.value):
                return False
            if not entry.localized.verify():
                return False
        for step in self.vanishing:
            if self.matrix is None or not self.matrix.kills(step.vector):
                return False
            if step.certificate.vector != step.vector or not step.certificate.verify():
                return False

        closed = self.unit_exponent is not None and (ring.one**self.unit_exponent).is_zero
        closed = closed or any(
            any(x == ring.one for x in step.vector) for step in self.vanishing
        )
        return closed and ring.one.is_zero

    def describe(self) -> list[str]:
        lines = [f"1 = 0 in {self.ring.spec} ({self.source})"]
        for entry in self.entries:
            lines.append(
                f"  M[{entry.row},{entry.col}] = {entry.value} with {entry.value}^{entry.exponent} = 0"
                f", since {entry.localized.ring.spec} is trivial"
            )
        for step in self.vanishing:
            lines.append(f"  kernel vector ({', '.join(str(x) for x in step.vector)}) vanishes")
        if self.unit_exponent is not None:
            lines.append(f"  1^{self.unit_exponent} = 0")
        return lines


EntryNilpotency.model_rebuild()


class McCoyReport(BaseModel):
    """Regularity of the ideal of maximal minors, with the witness when it fails."""

    model_config = {"arbitrary_types_allowed": True}

    matrix: Matrix
    minors: Ideal
    annihilator: Ideal = Field(description="(0 : minors)")
    regular: bool
    witness: RingElem | None = Field(default=None, description="x != 0 with x * minors = 0")
    kernel_vector: list[RingElem] | None = Field(default=None, description="v != 0 with M v = 0")
    refused_vector: list[RingElem] | None = Field(
        default=None, description="Kernel vector the unwound argument's oracle refused"
    )
    injective: bool | None = Field(default=None, description="Kernel enumeration, finite rings only")

    def verify(self) -> bool:
        if self.regular:
            return all(g.is_zero for g in self.annihilator.generators) and self.witness is None
        if self.witness is None or self.witness.is_zero:
            return False
        if not all((self.witness * g).is_zero for g in self.minors.generators):
            return False
        for vector in (self.kernel_vector, self.refused_vector):
            if vector is None:
                continue
            if all(x.is_zero for x in vector) or not self.matrix.kills(vector):
                return False
        return True


class RichmanOutcome(BaseModel):
    """Either a kernel vector (the matrix is not injective) or a proof of 1 = 0."""

    model_config = {"arbitrary_types_allowed": True}

    injective: bool
    kernel_vector: list[RingElem] | None = None
    certificate: TrivialityCertificate | None = None


class FreenessResult(BaseModel):
    """A localizing element with a basis of the localized module, or a proof of 1 = 0."""

    model_config = {"arbitrary_types_allowed": True}

    presentation: Matrix | None = Field(default=None, description="Relations, one per row")
    element: RingElem | None = Field(default=None, description="f with M[f^-1] free")
    localized_ring: RingPresentation | None = None
    basis: list[int] = Field(default_factory=list, description="Generators forming a basis")
    certificate: TrivialityCertificate | None = None

    @property
    def rank(self) -> int:
        return len(self.basis)
