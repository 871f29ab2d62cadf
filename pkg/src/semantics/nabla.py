"""The local operator nabla on opens: nabla U = meet over s of ((U => [[s=0]]) => [[s=0]])."""

import logging

from src.frame.models import Open
from src.frame.operations import heyting, meet_all, negation
from src.rings.models import RingKind, UnsupportedRingError
from src.rings.presentation import RingPresentation
from .truth import equality_open

logger = logging.getLogger(__name__)


def nabla_open(ring: RingPresentation, u: Open) -> Open:
    """Apply nabla to an open.

    Z/n: the finite meet over all s of the double implication into [[s = 0]].
    Known-reduced rings: nabla coincides with double negation.

    Raises:
        UnsupportedRingError: Infinite ring not known to be reduced
    """
    if ring.kind == RingKind.MODULAR_INTEGERS:
        parts = []
        for s in ring.elements():
            zero = equality_open(ring, s)
            parts.append(heyting(heyting(u, zero), zero))
        result = meet_all(ring, parts)
        logger.debug(f"nabla {u} = {result} in {ring.spec}")
        return result
    if ring.is_known_reduced:
        assume = ring.is_polynomial
        return negation(negation(u, assume_radical=assume), assume_radical=assume)
    raise UnsupportedRingError(
        "nabla needs a finite ring or a ring known to be reduced", ring=ring.spec
    )
