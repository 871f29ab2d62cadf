"""Kernel vectors, injectivity oracles and the localize-and-eliminate step.

Every oracle an algorithm consults goes through ``guarded``, which refuses to
pass on a vector unless M * v = 0 has been checked first, and which turns a
refusal or a bad certificate into an OracleCertificateError carrying the
offending vector.
"""

import logging
from itertools import product

from src.localizations.operations import lift_from_localization, localize_modular, to_localization
from src.rings.models import UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from .models import InjectivityOracle, Matrix, OracleCertificateError, VanishingCertificate

logger = logging.getLogger(__name__)


def _show(vector: list[RingElem]) -> str:
    return "(" + ", ".join(str(x) for x in vector) + ")"


def find_kernel_vector(matrix: Matrix) -> list[RingElem] | None:
    """A nonzero v with M * v = 0, by enumerating A^cols; None when M is injective."""
    ring = matrix.ring
    if not ring.is_finite:
        raise UnsupportedRingError("Kernel enumeration needs a finite ring", ring=ring.spec)
    for candidate in product(list(ring.elements()), repeat=matrix.cols):
        vector = list(candidate)
        if any(not x.is_zero for x in vector) and matrix.kills(vector):
            logger.debug(f"Kernel vector {_show(vector)} of {matrix} over {ring.spec}")
            return vector
    return None


def zero_test_oracle(matrix: Matrix) -> InjectivityOracle:
    """The oracle of an injective matrix over a finite ring: kernel vectors are literally zero."""

    def oracle(vector: list[RingElem]) -> VanishingCertificate | None:
        if all(x.is_zero for x in vector):
            return VanishingCertificate(vector=vector)
        return None

    return oracle


def guarded(matrix: Matrix, oracle: InjectivityOracle) -> InjectivityOracle:
    """Check M * v = 0 before asking, and check what comes back.

    Raises:
        OracleCertificateError: The oracle refused or its certificate does not verify
    """
    ring = matrix.ring

    def ask(vector: list[RingElem]) -> VanishingCertificate:
        if not matrix.kills(vector):
            raise OracleCertificateError(
                f"Refusing to query the oracle on {_show(vector)}: not a kernel vector of {matrix}",
                vector=vector,
                ring=ring.spec,
            )
        certificate = oracle(vector)
        if certificate is None:
            raise OracleCertificateError(
                f"Oracle refused kernel vector {_show(vector)} of {matrix}", vector=vector, ring=ring.spec
            )
        if certificate.vector != vector or not certificate.verify():
            raise OracleCertificateError(
                f"Oracle certificate for {_show(vector)} does not verify", vector=vector, ring=ring.spec
            )
        return certificate

    return ask


class Elimination:
    """M over A[s^-1] with the pivot s = M[i, j] used to clear column j.

    Row i and column j are dropped; kernel vectors of the reduced matrix
    extend back through v_j = -s^-1 * sum_{c != j} M[i, c] v_c.
    """

    def __init__(self, matrix: Matrix, row: int, col: int):
        self.source = matrix
        self.row = row
        self.col = col
        self.pivot = matrix[row, col]
        self.local = localize_modular(matrix.ring, self.pivot)
        self.mapped = matrix.map_to(self.local)
        # the pivot is a unit in Z/m; pow(_, -1, 1) is 0
        self.inverse = self.local.element(pow(int(self.pivot.value), -1, self.local.modulus))

        keep_rows = [r for r in range(matrix.rows) if r != row]
        keep_cols = [c for c in range(matrix.cols) if c != col]
        pivot_row = self.mapped.entries[row]
        entries = []
        for r in keep_rows:
            factor = self.mapped[r, col] * self.inverse
            entries.append([self.mapped[r, c] - factor * pivot_row[c] for c in keep_cols])
        self.reduced = Matrix(ring=self.local, entries=entries, cols=len(keep_cols))

    def extend(self, vector: list[RingElem]) -> list[RingElem]:
        """Kernel vector of the reduced matrix to one of M over A[s^-1]."""
        pivot_row = self.mapped.entries[self.row]
        full = vector[: self.col] + [self.local.zero] + vector[self.col :]
        rest = sum(
            (pivot_row[c] * full[c] for c in range(self.source.cols) if c != self.col), self.local.zero
        )
        full[self.col] = -(self.inverse * rest)
        return full

    def lift(self, vector: list[RingElem]) -> list[RingElem]:
        """Kernel vector of the reduced matrix to one of M over A, zero off the localization."""
        ring = self.source.ring
        return [lift_from_localization(ring, self.local, x) for x in self.extend(vector)]

    def lifted_oracle(self, oracle: InjectivityOracle) -> InjectivityOracle:
        """Injectivity of M over A, seen through the reduced matrix over A[s^-1]."""

        def ask(vector: list[RingElem]) -> VanishingCertificate | None:
            lifted = self.lift(vector)
            parent = oracle(lifted)
            if parent is None:
                return None
            image = [to_localization(self.local, x) for x in parent.vector]
            return VanishingCertificate(vector=image[: self.col] + image[self.col + 1 :])

        return ask