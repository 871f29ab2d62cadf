"""Richman's theorem: over a reduced ring, an injective matrix with more columns
than rows forces 1 = 0.

The trivializer localizes at each entry in row-major order, eliminates its
row and column, and recurses on the smaller (still wide) matrix over the
localization. A trivial localization makes the entry nilpotent, hence zero in
a reduced ring; once every entry is zero the oracle is asked about (1, 0, ..., 0).
"""

import logging

from src.rings.models import ReducednessError, UnsupportedRingError
from src.rings.presentation import RingPresentation
from .kernel import find_kernel_vector, guarded, zero_test_oracle
from .mccoy import unwind
from .models import (
    InjectivityOracle,
    Matrix,
    MatrixError,
    OracleCertificateError,
    RichmanOutcome,
    TrivialityCertificate,
)

logger = logging.getLogger(__name__)


def richman_trivializer(
    ring: RingPresentation, matrix: Matrix, oracle: InjectivityOracle
) -> TrivialityCertificate:
    """A verified 1 = 0 from an injectivity oracle for a wide matrix.

    The oracle only ever sees vectors v for which M * v = 0 has been checked.

    Raises:
        UnsupportedRingError: Ring is not Z/n
        ReducednessError: Ring is not known to be reduced
        MatrixError: M does not have more columns than rows
        OracleCertificateError: The oracle refused or its certificate does not verify
    """
    if not ring.is_finite:
        raise UnsupportedRingError("Richman's trivializer runs over Z/n", ring=ring.spec)
    if not ring.is_known_reduced:
        raise ReducednessError("Richman's trivializer needs a reduced ring", ring=ring.spec)
    if matrix.ring != ring:
        raise MatrixError(f"Matrix lives over {matrix.ring.spec}", ring=ring.spec)
    if matrix.cols <= matrix.rows:
        raise MatrixError(f"{matrix} needs more columns than rows", ring=ring.spec)

    certificate = unwind(matrix, guarded(matrix, oracle), source="richman")
    logger.info(f"Trivialized {ring.spec} from the injectivity of {matrix}")
    return certificate


def richman_harness(
    ring: RingPresentation, matrix: Matrix, oracle: InjectivityOracle | None = None
) -> RichmanOutcome:
    """Check injectivity by kernel enumeration before trusting anything.

    A kernel vector short-circuits to a non-injective outcome. Otherwise the
    trivializer runs with ``oracle`` (by default the zero test, which is exact
    for an injective matrix); a refusal along the way is reported with its vector.
    """
    kernel = find_kernel_vector(matrix)
    if kernel is not None:
        logger.info(f"{matrix} is not injective over {ring.spec}")
        return RichmanOutcome(injective=False, kernel_vector=kernel)
    try:
        certificate = richman_trivializer(ring, matrix, oracle or zero_test_oracle(matrix))
    except OracleCertificateError as e:
        if e.vector is None:
            raise
        return RichmanOutcome(injective=False, kernel_vector=e.vector)
    return RichmanOutcome(injective=True, certificate=certificate)
