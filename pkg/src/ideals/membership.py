"""Certificate-producing ideal and radical membership.

Every answer comes with a MembershipCertificate f^n = sum u_k g_{i_k}. The
check in ``verify_membership`` only uses ring arithmetic and never calls back
into the producers.
"""

import logging

from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyRing

from config.settings import settings
from src.rings.buchberger import groebner_with_cofactors
from src.rings.models import RingKind, SearchBudgetError
from src.rings.presentation import RingElem, RingPresentation
from .models import CertificateError, CofactorTerm, Ideal, MembershipCertificate
from .principal import divides, principal_generator
from .groebner import reduce_over_ideal

logger = logging.getLogger(__name__)


def verify_membership(
    ring: RingPresentation, ideal: Ideal, f: RingElem, certificate: MembershipCertificate
) -> bool:
    """Re-check f^n - sum(u_k * g_{i_k}) = 0 by plain ring arithmetic."""
    if certificate.exponent < 1 or certificate.element != f:
        return False
    total = ring.zero
    for t in certificate.cofactors:
        if not 0 <= t.index < len(ideal.generators):
            return False
        if t.cofactor.ring != ring:
            return False
        total = total + t.cofactor * ideal.generators[t.index]
    return (f**certificate.exponent - total).is_zero


def _certificate(
    f: RingElem, exponent: int, cofactors: list[RingElem]
) -> MembershipCertificate:
    terms = [CofactorTerm(cofactor=u, index=i) for i, u in enumerate(cofactors) if not u.is_zero]
    return MembershipCertificate(element=f, exponent=exponent, cofactors=terms)


def _checked(
    ring: RingPresentation, ideal: Ideal, certificate: MembershipCertificate
) -> MembershipCertificate:
    if not verify_membership(ring, ideal, certificate.element, certificate):
        raise CertificateError(
            f"Produced certificate for {certificate.element} in {ideal} does not verify",
            ring=ring.spec,
        )
    return certificate


def ideal_membership(
    ring: RingPresentation, ideal: Ideal, f: RingElem
) -> MembershipCertificate | None:
    """Decide f in I, returning a certificate with exponent 1.

    Integers and modular integers use extended gcd; polynomial presentations
    use Gröbner reduction with cofactor tracking.
    """
    f = ring.element(f)
    if f.is_zero:
        return MembershipCertificate(element=f, exponent=1)

    if ring.is_principal:
        d, coeffs = principal_generator(ideal)
        if not divides(ring, d, int(f.value)):
            return None
        quotient = int(f.value) // d
        cofactors = [ring.element(quotient * c) for c in coeffs]
        return _checked(ring, ideal, _certificate(f, 1, cofactors))

    cofactors = reduce_over_ideal(ring, ideal, f)
    if cofactors is None:
        return None
    return _checked(ring, ideal, _certificate(f, 1, cofactors))


def radical_membership(
    ring: RingPresentation, ideal: Ideal, f: RingElem
) -> MembershipCertificate | None:
    """Decide f in sqrt(I), returning a certificate f^n = sum u_k g_{i_k}.

    Principal rings: bounded exponent search with ideal membership at each
    step (the bound is the bit length of the ideal's generator, or of n).
    Polynomial presentations: 1 in I + (1 - t*f) in one more variable, then
    t = 1/f is substituted and denominators are cleared.
    """
    f = ring.element(f)
    if f.is_zero:
        return MembershipCertificate(element=f, exponent=1)

    if ring.is_principal:
        return _radical_membership_principal(ring, ideal, f)
    return _radical_membership_rabinowitsch(ring, ideal, f)


def _radical_membership_principal(
    ring: RingPresentation, ideal: Ideal, f: RingElem
) -> MembershipCertificate | None:
    d, coeffs = principal_generator(ideal)
    if ring.kind == RingKind.INTEGERS:
        if d == 0:
            return None
        analytic = d.bit_length()
    else:
        analytic = ring.modulus.bit_length()

    for n in range(1, settings.search.bound(analytic) + 1):
        power = int((f**n).value)
        if divides(ring, d, power):
            quotient = power // d
            cofactors = [ring.element(quotient * c) for c in coeffs]
            logger.debug(f"{f} in sqrt{ideal} with exponent {n}")
            return _checked(ring, ideal, _certificate(f, n, cofactors))
    if settings.search.truncates(analytic):
        raise SearchBudgetError(
            f"No exponent n <= {settings.search.exponent_cap} puts {f}^n in {ideal};"
            f" the analytic bound is {analytic}",
            ring=ring.spec,
        )
    return None


def _radical_membership_rabinowitsch(
    ring: RingPresentation, ideal: Ideal, f: RingElem
) -> MembershipCertificate | None:
    base: PolyRing = ring.poly_ring
    t_name = _fresh_name(ring.variables)
    extended = PolyRing(",".join(ring.variables + (t_name,)), base.domain, grevlex)

    def lift(p):
        return extended.from_dict({m + (0,): c for m, c in p.items()})

    t = extended.gens[-1]
    gens = [lift(g.value) for g in ideal.generators]
    gens += [lift(r) for r in ring.relation_basis]
    gens.append(extended.one - t * lift(f.value))

    basis, transformation = groebner_with_cofactors(
        gens, max_pairs=settings.search.max_groebner_pairs
    )
    if basis != [extended.one]:
        return None

    # cofactors of 1 over the generators; the last one multiplies (1 - t*f)
    row = transformation[0]
    cofactor_rows = row[:-1]
    exponent = max(1, max((_t_degree(c) for c in cofactor_rows if c), default=0))

    powers = [base.one]
    for _ in range(exponent):
        powers.append(powers[-1] * f.value)

    cofactors: list[RingElem] = []
    for c in row[: len(ideal.generators)]:
        poly = base.zero
        for monom, coeff in c.items():
            j = monom[-1]
            poly += base.from_dict({monom[:-1]: coeff}) * powers[exponent - j]
        cofactors.append(ring.element(poly))

    logger.debug(f"Rabinowitsch certificate for {f} in sqrt{ideal}: exponent {exponent}")
    return _checked(ring, ideal, _certificate(f, exponent, cofactors))


def _t_degree(poly) -> int:
    return max(m[-1] for m in poly.monoms())


def _fresh_name(variables: tuple[str, ...]) -> str:
    name = "t"
    while name in variables:
        name = "_" + name
    return name


def ideal_contains(ring: RingPresentation, big: Ideal, small: Ideal) -> bool:
    """small is contained in big (generator-wise membership)."""
    return all(ideal_membership(ring, big, g) is not None for g in small.generators)


def ideals_equal(ring: RingPresentation, a: Ideal, b: Ideal) -> bool:
    """Ideal equality by mutual generator membership."""
    return ideal_contains(ring, a, b) and ideal_contains(ring, b, a)
