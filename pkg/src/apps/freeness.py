"""Simple generic freeness over finite reduced rings.

The module is the cokernel of a presentation matrix P: generators e_1..e_g,
one relation per row. If every relation coefficient vanishes the module is
free on its generators. Otherwise a nonzero coefficient a = P[i, j] becomes a
unit in A[a^-1], relation i expresses e_j through the other generators, and
the argument recurses on one generator fewer. The localizing element of the
recursive call lifts back as a * lift(f').
"""

import logging
from itertools import product

from src.localizations.operations import lift_from_localization, localize_modular
from src.rings.arithmetic import is_nilpotent
from src.rings.models import ReducednessError, UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from .kernel import Elimination
from .models import FreenessResult, Matrix, MatrixError, TrivialityCertificate

logger = logging.getLogger(__name__)


def _first_nonzero(matrix: Matrix) -> tuple[int, int] | None:
    for i, row in enumerate(matrix.entries):
        for j, x in enumerate(row):
            if not x.is_zero:
                return i, j
    return None


def _localizing_element(
    presentation: Matrix, names: list[int]
) -> tuple[RingElem, list[int]]:
    """(f, surviving generator names) with M[f^-1] free on those generators."""
    ring = presentation.ring
    pivot = _first_nonzero(presentation)
    if pivot is None:
        return ring.one, names

    i, j = pivot
    step = Elimination(presentation, i, j)
    logger.debug(
        f"Generator e_{names[j] + 1} is redundant over {step.local.spec} = {ring.spec}[{step.pivot}^-1]"
    )
    local_f, basis = _localizing_element(step.reduced, names[:j] + names[j + 1 :])
    return step.pivot * lift_from_localization(ring, step.local, local_f), basis


def generic_freeness_simple(ring: RingPresentation, presentation: Matrix) -> FreenessResult:
    """A non-nilpotent f with M[f^-1] free over A[f^-1], or 1 = 0 when A is trivial.

    Raises:
        UnsupportedRingError: Ring is not Z/n
        ReducednessError: Ring is not known to be reduced
    """
    if not ring.is_finite:
        raise UnsupportedRingError("Generic freeness runs over Z/n", ring=ring.spec)
    if not ring.is_known_reduced:
        raise ReducednessError("Generic freeness needs a reduced ring", ring=ring.spec)
    if presentation.ring != ring:
        raise MatrixError(f"Presentation lives over {presentation.ring.spec}", ring=ring.spec)

    if ring.is_trivial:
        certificate = TrivialityCertificate(ring=ring, source="generic-freeness", unit_exponent=1)
        return FreenessResult(presentation=presentation, certificate=certificate)

    f, basis = _localizing_element(presentation, list(range(presentation.cols)))
    result = FreenessResult(
        presentation=presentation,
        element=f,
        localized_ring=localize_modular(ring, f),
        basis=basis,
    )
    if not verify_freeness(result):
        raise MatrixError(f"Freeness of the localization at {f} does not verify", ring=ring.spec)
    logger.info(
        f"coker {presentation} is free of rank {result.rank} over {result.localized_ring.spec}"
        f" = {ring.spec}[{f}^-1]"
    )
    return result


def _span(matrix: Matrix) -> set[tuple[int, ...]]:
    ring = matrix.ring
    span = set()
    for coeffs in product(range(ring.modulus), repeat=matrix.rows):
        combo = [
            sum(c * int(row[k].value) for c, row in zip(coeffs, matrix.entries)) % ring.modulus
            for k in range(matrix.cols)
        ]
        span.add(tuple(combo))
    return span


def verify_freeness(result: FreenessResult) -> bool:
    """Re-check a freeness claim by enumerating the localized module.

    The images of the basis generators must be independent modulo the
    relations, and the module must have exactly m^rank elements.
    """
    if result.certificate is not None:
        return result.certificate.verify()
    if result.element is None or result.localized_ring is None or result.presentation is None:
        return False
    ring = result.presentation.ring
    if is_nilpotent(ring, result.element) is not None:
        return False
    local = result.localized_ring
    if local != localize_modular(ring, result.element):
        return False

    relations = result.presentation.map_to(local)
    span = _span(relations)
    m, g = local.modulus, relations.cols
    if m**g != len(span) * m**result.rank:
        return False
    for coeffs in product(range(m), repeat=result.rank):
        if not any(coeffs):
            continue
        vector = [0] * g
        for c, name in zip(coeffs, result.basis):
            vector[name] = c
        if tuple(vector) in span:
            return False
    return True
