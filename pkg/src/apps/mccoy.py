"""McCoy's theorem: an injective matrix has a regular ideal of maximal minors.

``mccoy_regularity`` decides regularity through the annihilator (0 : minors)
and, when it fails, turns the annihilating element into a kernel vector. The
proof itself is run as ``unwind``: given an injectivity oracle for M over a
ring in which the maximal minors vanish, it localizes at every entry,
eliminates, recurses, and finishes with the nilpotent-entries step, producing
a checkable 1 = 0.
"""

import logging
from itertools import combinations
from math import gcd

from src.ideals.models import CertificateError, Ideal
from src.ideals.principal import principal_generator
from src.ideals.quotient import ideal_quotient
from src.rings.arithmetic import is_nilpotent
from src.rings.models import UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from .kernel import Elimination, find_kernel_vector, guarded, zero_test_oracle
from .minors import minor, minors
from .models import (
    EntryNilpotency,
    InjectivityOracle,
    Matrix,
    MatrixError,
    McCoyReport,
    OracleCertificateError,
    TrivialityCertificate,
    VanishingCertificate,
    VanishingStep,
)

logger = logging.getLogger(__name__)


def maximal_minors(matrix: Matrix) -> Ideal:
    """Ideal of cols x cols minors; the zero ideal when there are more columns than rows."""
    if matrix.cols > matrix.rows:
        return Ideal.zero(matrix.ring)
    return minors(matrix, matrix.cols)


def _nilpotent_exponent(ring: RingPresentation, x: RingElem) -> int:
    witness = is_nilpotent(ring, x)
    if witness is None:
        raise CertificateError(f"{x} is not nilpotent", ring=ring.spec)
    return witness.exponent


def unwind(matrix: Matrix, oracle: InjectivityOracle, source: str = "mccoy") -> TrivialityCertificate:
    """1 = 0 from an injectivity oracle for M, assuming the maximal minors of M vanish.

    ``oracle`` must already be guarded for ``matrix``.

    Raises:
        OracleCertificateError: The oracle refused some kernel vector
    """
    ring = matrix.ring
    if ring.is_trivial:
        return TrivialityCertificate(ring=ring, source=source, unit_exponent=1)
    if matrix.cols == 0:
        raise MatrixError("The empty minor is 1, which does not vanish", ring=ring.spec)

    entries: list[EntryNilpotency] = []
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            step = Elimination(matrix, i, j)
            logger.debug(f"Localizing {ring.spec} at M[{i},{j}] = {step.pivot}: {step.local.spec}")
            local = unwind(step.reduced, guarded(step.reduced, step.lifted_oracle(oracle)), source)
            entries.append(
                EntryNilpotency(
                    row=i,
                    col=j,
                    value=step.pivot,
                    exponent=_nilpotent_exponent(ring, step.pivot),
                    localized=local,
                )
            )

    # every entry is a multiple of d, and d is nilpotent
    d = ring.element(gcd(ring.modulus, *(int(x.value) for row in matrix.entries for x in row)))
    top = _nilpotent_exponent(ring, d)
    vanishing: list[VanishingStep] = []
    for k in range(top, 0, -1):
        vector = [d ** (k - 1)] + [ring.zero] * (matrix.cols - 1)
        vanishing.append(VanishingStep(vector=vector, certificate=oracle(vector)))

    certificate = TrivialityCertificate(
        ring=ring, source=source, matrix=matrix, entries=entries, vanishing=vanishing
    )
    if not certificate.verify():
        raise CertificateError("Assembled triviality certificate does not verify", ring=ring.spec)
    return certificate


def mccoy_trivializer(matrix: Matrix, oracle: InjectivityOracle) -> TrivialityCertificate:
    """The unwound McCoy argument over Z/n.

    Raises:
        MatrixError: The maximal minors of M do not vanish
        OracleCertificateError: The oracle refused or answered wrongly
    """
    ring = matrix.ring
    if not ring.is_finite:
        raise UnsupportedRingError("The unwound argument runs over Z/n", ring=ring.spec)
    if any(not g.is_zero for g in maximal_minors(matrix).generators):
        raise MatrixError(f"Maximal minors of {matrix} do not vanish", ring=ring.spec)
    return unwind(matrix, guarded(matrix, oracle))


def kernel_from_annihilator(matrix: Matrix, x: RingElem) -> list[RingElem]:
    """A nonzero kernel vector of M from x != 0 annihilating the maximal minors.

    Take the largest k with x * (k-minors) != 0, a k-minor on rows R and
    columns C that x does not kill, and one more column j. Expanding
    x * det over C + {j} along any extra row gives M v = 0.
    """
    ring = matrix.ring
    if x.is_zero:
        raise MatrixError("The annihilating element must be nonzero", ring=ring.spec)
    for k in range(min(matrix.rows, matrix.cols - 1), -1, -1):
        for rows in combinations(range(matrix.rows), k):
            for cols in combinations(range(matrix.cols), k):
                if (x * minor(matrix, rows, cols)).is_zero:
                    continue
                extra = next(c for c in range(matrix.cols) if c not in cols)
                support = sorted(cols + (extra,))
                vector = [ring.zero] * matrix.cols
                for p, c in enumerate(support):
                    rest = tuple(s for s in support if s != c)
                    value = x * minor(matrix, rows, rest)
                    vector[c] = -value if p % 2 else value
                if not matrix.kills(vector):
                    raise CertificateError(f"x = {x} does not annihilate the maximal minors", ring=ring.spec)
                return vector
    raise MatrixError(f"x = {x} annihilates every minor, including the empty one", ring=ring.spec)


def _through_annihilator(matrix: Matrix, x: RingElem) -> tuple[Matrix, InjectivityOracle]:
    """M over A/(0 : x), with the oracle that asks whether x * v = 0 in A."""
    ring = matrix.ring
    quotient = RingPresentation.modular(ring.modulus // gcd(int(x.value), ring.modulus))
    ask = guarded(matrix, zero_test_oracle(matrix))

    def oracle(vector: list[RingElem]) -> VanishingCertificate | None:
        ask([x * ring.element(int(v.value)) for v in vector])
        return VanishingCertificate(vector=vector)

    return matrix.map_to(quotient), oracle


def mccoy_regularity(ring: RingPresentation, matrix: Matrix) -> McCoyReport:
    """Is the ideal of maximal minors regular?

    Over Z/n the unwound argument also runs on A/(0 : x) for the annihilating
    x, and the vector its oracle refuses is recorded as a kernel vector.

    Raises:
        UnsupportedRingError: Ring is neither Z nor Z/n
    """
    if not ring.is_principal:
        raise UnsupportedRingError("McCoy regularity needs Z or Z/n", ring=ring.spec)
    if matrix.ring != ring:
        raise MatrixError(f"Matrix lives over {matrix.ring.spec}", ring=ring.spec)

    lam = maximal_minors(matrix)
    annihilator = ideal_quotient(ring, Ideal.zero(ring), lam)
    generator, _ = principal_generator(annihilator)
    x = ring.element(generator)
    injective = find_kernel_vector(matrix) is None if ring.is_finite else None

    if x.is_zero:
        logger.info(f"Maximal minors {lam} of {matrix} are regular in {ring.spec}")
        return McCoyReport(
            matrix=matrix, minors=lam, annihilator=annihilator, regular=True, injective=injective
        )

    kernel = kernel_from_annihilator(matrix, x)
    refused = None
    if ring.is_finite:
        local, oracle = _through_annihilator(matrix, x)
        try:
            mccoy_trivializer(local, oracle)
        except OracleCertificateError as e:
            refused = e.vector
            logger.debug(f"Unwound argument stopped at kernel vector {refused}")
        else:
            raise CertificateError(f"x = {x} is nonzero yet the oracle certified 1 = 0", ring=ring.spec)

    logger.info(f"{x} annihilates the maximal minors of {matrix} in {ring.spec}")
    return McCoyReport(
        matrix=matrix,
        minors=lam,
        annihilator=annihilator,
        regular=False,
        witness=x,
        kernel_vector=kernel,
        refused_vector=refused,
        injective=injective,
    )
