"""Ideal quotients (I : J) and annihilator saturation (0 : x^inf)."""

import logging
from math import gcd

from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from config.settings import settings
from src.rings.buchberger import groebner_with_cofactors
from src.rings.models import RingKind, SearchBudgetError
from src.rings.presentation import RingElem, RingPresentation
from .membership import ideals_equal
from .models import Ideal, SaturationResult
from .principal import principal_generator, principal_ideal

logger = logging.getLogger(__name__)


def ideal_quotient(ring: RingPresentation, i: Ideal, j: Ideal) -> Ideal:
    """Compute (I : J) = {x : x*J is contained in I}.

    Exact lattice arithmetic on divisors for Z and Z/n; for polynomial
    presentations (I : J) is the intersection of the (I : h) over generators h
    of J, each obtained from an elimination Gröbner basis.
    """
    if ring.is_principal:
        return _quotient_principal(ring, i, j)
    return _quotient_polynomial(ring, i, j)


def _quotient_principal(ring: RingPresentation, i: Ideal, j: Ideal) -> Ideal:
    a, _ = principal_generator(i)
    b, _ = principal_generator(j)
    if ring.kind == RingKind.INTEGERS:
        if b == 0:
            return Ideal.unit(ring)
        if a == 0:
            return Ideal.zero(ring)
    # in Z/n both a and b divide n, and the zero ideal is (n)
    return principal_ideal(ring, a // gcd(a, b))


def _quotient_polynomial(ring: RingPresentation, i: Ideal, j: Ideal) -> Ideal:
    base: PolyRing = ring.poly_ring
    lifted_i = [g.value for g in i.generators] + list(ring.relation_basis)
    result: list[PolyElement] | None = None

    for h in j.generators:
        if h.is_zero:
            continue
        part = _quotient_by_element(base, lifted_i, h.value)
        result = part if result is None else _intersect(base, result, part)

    if result is None:
        return Ideal.unit(ring)
    quotient = Ideal(ring, [ring.element(p) for p in result]).deduplicated()
    logger.debug(f"({i} : {j}) = {quotient} in {ring.spec}")
    return quotient


def _elimination_ring(base: PolyRing) -> tuple[PolyRing, str]:
    name = "s"
    while name in {str(g) for g in base.symbols}:
        name = "_" + name
    symbols = ",".join([name] + [str(g) for g in base.symbols])
    return PolyRing(symbols, base.domain, lex), name


def _intersect(
    base: PolyRing, first: list[PolyElement], second: list[PolyElement]
) -> list[PolyElement]:
    """Generators of (first) cap (second) via s*first + (1 - s)*second, eliminating s."""
    if not first or not second:
        return []
    elim, _ = _elimination_ring(base)
    s = elim.gens[0]

    def lift(p):
        return elim.from_dict({(0,) + m: c for m, c in p.items()})

    def drop(p):
        return base.from_dict({m[1:]: c for m, c in p.items()})

    gens = [s * lift(p) for p in first] + [(elim.one - s) * lift(p) for p in second]
    basis, _ = groebner_with_cofactors(gens, max_pairs=settings.search.max_groebner_pairs)
    return [drop(p) for p in basis if all(m[0] == 0 for m in p.monoms())]


def _quotient_by_element(
    base: PolyRing, ideal: list[PolyElement], h: PolyElement
) -> list[PolyElement]:
    """(I : h) = (I cap (h)) / h."""
    nonzero = [p for p in ideal if p]
    if not nonzero:
        return []
    return [p.exquo(h) for p in _intersect(base, nonzero, [h])]


def annihilator_saturation(ring: RingPresentation, x: RingElem) -> SaturationResult:
    """Compute (0 : x) and iterate (0 : x^k) until two successive ideals agree.

    Raises:
        SearchBudgetError: If the chain has not stabilized after the configured
            number of steps
    """
    x = ring.element(x)
    zero = Ideal.zero(ring)
    annihilator = ideal_quotient(ring, zero, Ideal(ring, [x]))
    current = annihilator
    power = x
    for step in range(2, settings.search.saturation_max_steps + 1):
        power = power * x
        following = ideal_quotient(ring, zero, Ideal(ring, [power]))
        if ideals_equal(ring, current, following):
            logger.debug(f"(0 : {x}^inf) stabilized after {step} steps in {ring.spec}")
            return SaturationResult(
                element=x, annihilator=annihilator, saturation=current, steps=step
            )
        current = following
    raise SearchBudgetError(f"Saturation of {x} did not stabilize", ring=ring.spec)
