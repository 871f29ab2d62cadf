"""Buchberger's algorithm with cofactor tracking on sympy PolyElements.

Every polynomial produced here carries a cofactor vector expressing it over the
input generators, so that membership answers can be turned into certificates.
Pair selection follows the sugar strategy; pairs are discarded by the product
criterion and by the chain criterion.
"""

import logging
from dataclasses import dataclass

from sympy.polys.monomials import monomial_deg, monomial_div, monomial_lcm, monomial_mul
from sympy.polys.rings import PolyElement, PolyRing

from .models import SearchBudgetError

logger = logging.getLogger(__name__)


@dataclass
class TrackedPolynomial:
    """A polynomial together with its expression over the input generators."""

    poly: PolyElement
    cofactors: list[PolyElement]
    sugar: int


def total_degree(poly: PolyElement) -> int:
    """Total degree of a nonzero polynomial (0 for the zero polynomial)."""
    if not poly:
        return 0
    return max(monomial_deg(m) for m in poly.monoms())


def term(ring: PolyRing, monom: tuple[int, ...], coeff) -> PolyElement:
    """Build the single-term polynomial coeff * x^monom."""
    return ring.from_dict({monom: coeff})


def divide(
    f: PolyElement, divisors: list[PolyElement]
) -> tuple[list[PolyElement], PolyElement]:
    """Full multivariate division of f by an ordered list of divisors.

    Args:
        f: Dividend
        divisors: Nonzero divisors

    Returns:
        (quotients, remainder) with f = sum(q_i * d_i) + remainder and no term of
        remainder divisible by any leading monomial of the divisors
    """
    ring = f.ring
    domain = ring.domain
    quotients = [ring.zero for _ in divisors]
    remainder = ring.zero
    p = f.copy()

    while p:
        lm, lc = p.LM, p.LC
        for i, d in enumerate(divisors):
            m = monomial_div(lm, d.LM)
            if m is None:
                continue
            c = domain.quo(lc, d.LC)
            quotients[i] += term(ring, m, c)
            p -= d.mul_term((m, c))
            break
        else:
            lead = term(ring, lm, lc)
            remainder += lead
            p -= lead

    return quotients, remainder


def _reduce_tracked(
    h: TrackedPolynomial, basis: list[TrackedPolynomial]
) -> TrackedPolynomial:
    """Reduce h fully by the basis, updating its cofactors."""
    if not basis:
        return h
    quotients, remainder = divide(h.poly, [g.poly for g in basis])
    cofactors = list(h.cofactors)
    for q, g in zip(quotients, basis):
        if not q:
            continue
        cofactors = [c - q * gc for c, gc in zip(cofactors, g.cofactors)]
    return TrackedPolynomial(remainder, cofactors, h.sugar)


def _s_polynomial(f: TrackedPolynomial, g: TrackedPolynomial) -> TrackedPolynomial:
    """S-polynomial of two tracked polynomials with its sugar degree."""
    ring = f.poly.ring
    domain = ring.domain
    lcm = monomial_lcm(f.poly.LM, g.poly.LM)
    mf = monomial_div(lcm, f.poly.LM)
    mg = monomial_div(lcm, g.poly.LM)
    tf = term(ring, mf, domain.quo(domain.one, f.poly.LC))
    tg = term(ring, mg, domain.quo(domain.one, g.poly.LC))

    poly = f.poly * tf - g.poly * tg
    cofactors = [a * tf - b * tg for a, b in zip(f.cofactors, g.cofactors)]
    deg = monomial_deg(lcm)
    sugar = max(
        f.sugar + deg - monomial_deg(f.poly.LM),
        g.sugar + deg - monomial_deg(g.poly.LM),
    )
    return TrackedPolynomial(poly, cofactors, sugar)


def _pair_sugar(f: TrackedPolynomial, g: TrackedPolynomial) -> tuple[int, int]:
    deg = monomial_deg(monomial_lcm(f.poly.LM, g.poly.LM))
    sugar = max(
        f.sugar + deg - monomial_deg(f.poly.LM),
        g.sugar + deg - monomial_deg(g.poly.LM),
    )
    return sugar, deg


def groebner_with_cofactors(
    gens: list[PolyElement], max_pairs: int = 20_000
) -> tuple[list[PolyElement], list[list[PolyElement]]]:
    """Compute a reduced Gröbner basis and its expression over the inputs.

    Args:
        gens: Input generators, all in the same PolyRing (zeros allowed)
        max_pairs: Pair budget before giving up

    Returns:
        (basis, transformation) where basis[i] = sum_j transformation[i][j] * gens[j];
        the basis is reduced and monic, hence canonical for the ideal

    Raises:
        SearchBudgetError: If more than max_pairs S-pairs were needed
    """
    if not gens:
        return [], []

    ring = gens[0].ring
    n = len(gens)
    unit = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]

    basis: list[TrackedPolynomial] = []
    for i, g in enumerate(gens):
        if g:
            basis.append(TrackedPolynomial(g, unit[i], total_degree(g)))

    pairs: set[tuple[int, int]] = {(i, j) for j in range(len(basis)) for i in range(j)}
    processed = 0

    while pairs:
        i, j = min(pairs, key=lambda p: (*_pair_sugar(basis[p[0]], basis[p[1]]), p))
        pairs.discard((i, j))
        f, g = basis[i], basis[j]

        lcm = monomial_lcm(f.poly.LM, g.poly.LM)
        if lcm == monomial_mul(f.poly.LM, g.poly.LM):
            continue
        if _chain_criterion(i, j, lcm, basis, pairs):
            continue

        processed += 1
        if processed > max_pairs:
            raise SearchBudgetError(f"Gröbner computation exceeded {max_pairs} S-pairs")

        h = _reduce_tracked(_s_polynomial(f, g), basis)
        if not h.poly:
            continue

        logger.debug(f"New basis element from pair ({i}, {j}): LM={h.poly.LM}, sugar={h.sugar}")
        k = len(basis)
        basis.append(h)
        pairs.update((m, k) for m in range(k))

    reduced = _reduce_basis(basis)
    logger.debug(f"Gröbner basis of {n} generators has {len(reduced)} elements ({processed} pairs)")
    return [t.poly for t in reduced], [t.cofactors for t in reduced]


def _chain_criterion(
    i: int,
    j: int,
    lcm: tuple[int, ...],
    basis: list[TrackedPolynomial],
    pending: set[tuple[int, int]],
) -> bool:
    for k, h in enumerate(basis):
        if k in (i, j):
            continue
        if monomial_div(lcm, h.poly.LM) is None:
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _reduce_basis(basis: list[TrackedPolynomial]) -> list[TrackedPolynomial]:
    """Minimalize, interreduce and normalize leading coefficients to one."""
    minimal: list[TrackedPolynomial] = []
    for idx, g in enumerate(basis):
        redundant = False
        for jdx, h in enumerate(basis):
            if idx == jdx or monomial_div(g.poly.LM, h.poly.LM) is None:
                continue
            # equal leading monomials: keep the first occurrence only
            if g.poly.LM != h.poly.LM or jdx < idx:
                redundant = True
                break
        if not redundant:
            minimal.append(g)

    reduced: list[TrackedPolynomial] = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        lead = TrackedPolynomial(term(g.poly.ring, g.poly.LM, g.poly.LC), [], g.sugar)
        # cofactors still describe all of g; reduction subtracts q * other from both
        tail = TrackedPolynomial(g.poly - lead.poly, g.cofactors, g.sugar)
        tail = _reduce_tracked(tail, others)
        reduced.append(TrackedPolynomial(lead.poly + tail.poly, tail.cofactors, g.sugar))

    result = []
    for g in reduced:
        domain = g.poly.ring.domain
        inv = domain.quo(domain.one, g.poly.LC)
        result.append(
            TrackedPolynomial(g.poly * inv, [c * inv for c in g.cofactors], g.sugar)
        )

    result.sort(key=lambda t: t.poly.ring.order(t.poly.LM), reverse=True)
    return result
