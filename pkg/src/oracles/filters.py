"""Prime filters of finite rings and the semantic side of entailment."""

import logging
from functools import lru_cache
from itertools import combinations

from sympy import divisors

from config.settings import settings
from src.rings.models import RingKind, UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from .models import PrimeFilter, filter_violation

logger = logging.getLogger(__name__)


def _require_finite(ring: RingPresentation) -> None:
    if ring.kind != RingKind.MODULAR_INTEGERS:
        raise UnsupportedRingError("Prime filters are enumerated over Z/n only", ring=ring.spec)


def _candidates(ring: RingPresentation):
    n = ring.modulus
    if n <= settings.oracle.exhaustive_filter_limit:
        for size in range(n + 1):
            for subset in combinations(range(n), size):
                yield frozenset(subset)
        return
    # every ideal of Z/n is (d) for a divisor d, so prime ideals are among these
    for d in divisors(n):
        yield frozenset(x for x in range(n) if x % d != 0)


@lru_cache(maxsize=128)
def _filters(ring: RingPresentation) -> tuple[PrimeFilter, ...]:
    found = []
    seen: set[frozenset[int]] = set()
    for carrier in _candidates(ring):
        if carrier in seen or filter_violation(ring, carrier) is not None:
            continue
        seen.add(carrier)
        found.append(PrimeFilter(ring=ring, carrier=carrier))
    logger.debug(f"{ring.spec} has {len(found)} prime filters")
    return tuple(found)


def enumerate_prime_filters(ring: RingPresentation) -> list[PrimeFilter]:
    """All prime filters of Z/n, without duplicates.

    Small moduli are scanned subset by subset; larger ones only through the
    complements of the principal ideals (d), d dividing n.

    Raises:
        UnsupportedRingError: Ring is not Z/n
    """
    _require_finite(ring)
    return list(_filters(ring))


def prime_ideals(ring: RingPresentation) -> list[frozenset[int]]:
    """Complements of the prime filters."""
    return [pf.prime_ideal for pf in enumerate_prime_filters(ring)]


def semantic_entails(ring: RingPresentation, f: RingElem, gs: list[RingElem]) -> bool:
    """Every prime filter containing f contains some g in gs."""
    _require_finite(ring)
    f = ring.element(f)
    gs = [ring.element(g) for g in gs]
    for pf in _filters(ring):
        if f in pf and not any(g in pf for g in gs):
            logger.debug(f"Filter {pf} contains {f} but none of {[str(g) for g in gs]}")
            return False
    return True
