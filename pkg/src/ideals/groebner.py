"""Gröbner bases of ideals in polynomial presentations, with cofactor tracking."""

import logging
from functools import lru_cache

from sympy.polys.rings import PolyElement, PolyRing

from config.settings import settings
from src.rings.buchberger import divide, groebner_with_cofactors
from src.rings.models import UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from .models import Ideal

logger = logging.getLogger(__name__)


def _require_polynomial(ring: RingPresentation) -> None:
    if not ring.is_polynomial:
        raise UnsupportedRingError("Gröbner bases need a polynomial presentation", ring=ring.spec)


@lru_cache(maxsize=512)
def tracked_basis(
    ring: RingPresentation, generators: tuple[RingElem, ...]
) -> tuple[tuple[PolyElement, ...], tuple[tuple[PolyElement, ...], ...]]:
    """Gröbner basis of (generators) + relations, lifted to the free polynomial ring.

    The transformation rows only cover the ideal's own generators; the relation
    part is dropped since it vanishes in the quotient.
    """
    relations = list(ring.relation_basis)
    polys = [g.value for g in generators] + relations
    basis, transformation = groebner_with_cofactors(
        polys, max_pairs=settings.search.max_groebner_pairs
    )
    n = len(generators)
    return tuple(basis), tuple(tuple(row[:n]) for row in transformation)


def groebner_basis(ring: RingPresentation, ideal: Ideal) -> tuple[Ideal, list[list[RingElem]]]:
    """Gröbner basis of an ideal with its expression over the input generators.

    Args:
        ring: Polynomial presentation
        ideal: Ideal to process

    Returns:
        (basis, transformation) with basis[i] = sum_j transformation[i][j] * ideal[j]
        in the ring. Basis elements that vanish modulo the relations are dropped.

    Raises:
        UnsupportedRingError: For Z and Z/n
    """
    _require_polynomial(ring)
    if not ideal.generators:
        return Ideal.zero(ring), []

    basis, transformation = tracked_basis(ring, ideal.generators)
    kept: list[RingElem] = []
    rows: list[list[RingElem]] = []
    for poly, row in zip(basis, transformation):
        elem = ring.element(poly)
        if elem.is_zero:
            continue
        kept.append(elem)
        rows.append([ring.element(c) for c in row])

    logger.debug(f"Gröbner basis of {ideal} in {ring.spec}: {len(kept)} elements")
    return Ideal(ring, kept), rows


def reduce_over_ideal(
    ring: RingPresentation, ideal: Ideal, f: RingElem
) -> list[RingElem] | None:
    """Cofactors u with f = sum(u_j * ideal[j]), or None if f is not in the ideal."""
    _require_polynomial(ring)
    if f.is_zero:
        return [ring.zero for _ in ideal.generators]
    if not ideal.generators:
        return None

    basis, transformation = tracked_basis(ring, ideal.generators)
    quotients, remainder = divide(f.value, list(basis))
    if remainder:
        return None

    poly_ring: PolyRing = ring.poly_ring
    cofactors = [poly_ring.zero for _ in ideal.generators]
    for q, row in zip(quotients, transformation):
        if not q:
            continue
        cofactors = [c + q * t for c, t in zip(cofactors, row)]
    return [ring.element(c) for c in cofactors]
