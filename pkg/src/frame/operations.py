"""Order, lattice and Heyting operations on the frame of radical ideals.

Every comparison is a certificate-producing radical-membership test; opens are
never saturated to full radical ideals.
"""

import logging
from itertools import product

from sympy import divisors

from src.ideals.membership import radical_membership, verify_membership
from src.ideals.models import Ideal
from src.ideals.principal import principal_generator, principal_ideal
from src.ideals.quotient import ideal_quotient
from src.rings.arithmetic import radical_of_integer
from src.rings.models import MixedRingError, RingKind, UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from .models import LeqCertificate, Open

logger = logging.getLogger(__name__)


def _same_ring(u: Open, v: Open) -> RingPresentation:
    if u.ring != v.ring:
        raise MixedRingError(f"Opens of {u.ring.spec} and {v.ring.spec} cannot be combined")
    return u.ring


def basic_open(ring: RingPresentation, f: RingElem) -> Open:
    """D(f) = sqrt((f))."""
    return Open(Ideal(ring, [ring.element(f)]))


def leq(u: Open, v: Open) -> LeqCertificate | None:
    """U <= V in Rad(A), with one certificate per generator of U."""
    ring = _same_ring(u, v)
    certificates = []
    for g in u.generators:
        certificate = radical_membership(ring, v.support, g)
        if certificate is None:
            return None
        certificates.append(certificate)
    return LeqCertificate(lower=u, upper=v, certificates=certificates)


def verify_leq(certificate: LeqCertificate) -> bool:
    """Re-verify every membership certificate of a leq answer."""
    lower, upper = certificate.lower, certificate.upper
    if len(certificate.certificates) != len(lower.generators):
        return False
    return all(
        verify_membership(upper.ring, upper.support, g, c)
        for g, c in zip(lower.generators, certificate.certificates)
    )


def equal(u: Open, v: Open) -> bool:
    """Extensional equality: mutual radical membership of all generators."""
    return leq(u, v) is not None and leq(v, u) is not None


def join(u: Open, v: Open) -> Open:
    """Binary join: concatenated generators."""
    _same_ring(u, v)
    return Open((u.support + v.support).deduplicated())


def join_all(ring: RingPresentation, opens: list[Open]) -> Open:
    """Finite join; the empty join is bottom."""
    generators: list[RingElem] = []
    for u in opens:
        if u.ring != ring:
            raise MixedRingError("Open from another ring in join", ring=ring.spec)
        generators.extend(u.generators)
    return Open(Ideal(ring, generators).deduplicated())


def meet(u: Open, v: Open) -> Open:
    """Binary meet: all pairwise products of generators."""
    ring = _same_ring(u, v)
    products = [g * h for g, h in product(u.generators, v.generators)]
    return Open(Ideal(ring, products).deduplicated())


def meet_all(ring: RingPresentation, opens: list[Open]) -> Open:
    """Finite meet; the empty meet is top."""
    result = Open.top(ring)
    for u in opens:
        result = meet(result, u)
    return result


def radical_support(v: Open) -> Ideal:
    """A generator list whose ideal is already radical (principal rings only)."""
    ring = v.ring
    if not ring.is_principal:
        raise UnsupportedRingError("Radicals are only computed in Z and Z/n", ring=ring.spec)
    d, _ = principal_generator(v.support)
    return principal_ideal(ring, radical_of_integer(d))


def heyting(u: Open, v: Open, assume_radical: bool = False) -> Open:
    """Largest C with C and U below V: support (sqrt(V) : U).

    The quotient of a radical ideal is radical, so no further radical is taken.

    Args:
        u: Antecedent open
        v: Consequent open
        assume_radical: For polynomial presentations, declare that V's support
            generates a radical ideal

    Raises:
        UnsupportedRingError: Polynomial presentation without assume_radical
    """
    ring = _same_ring(u, v)
    if ring.is_principal:
        radical = radical_support(v)
    elif assume_radical:
        radical = v.support
    else:
        raise UnsupportedRingError(
            "Heyting implication over a polynomial presentation needs a radical consequent",
            ring=ring.spec,
        )
    return Open(ideal_quotient(ring, radical, u.support).deduplicated())


def negation(u: Open, assume_radical: bool = False) -> Open:
    """Pseudocomplement U => bottom."""
    return heyting(u, Open.bottom(u.ring), assume_radical=assume_radical)


def is_dense(u: Open) -> bool:
    """U is dense iff its negation is bottom."""
    return equal(negation(u), Open.bottom(u.ring))


def is_trivial_frame(ring: RingPresentation) -> bool:
    """top <= bottom, which holds iff 1 = 0 in the ring."""
    return leq(Open.top(ring), Open.bottom(ring)) is not None


def all_opens(ring: RingPresentation) -> list[Open]:
    """Every element of Rad(Z/n): the ideals (d) with d a squarefree divisor of n."""
    if ring.kind != RingKind.MODULAR_INTEGERS:
        raise UnsupportedRingError("Only finite rings have an enumerable frame", ring=ring.spec)
    n = ring.modulus
    return [
        principal_open(ring, d) for d in divisors(n) if radical_of_integer(d) == d
    ]


def principal_open(ring: RingPresentation, d: int) -> Open:
    return Open(principal_ideal(ring, d))


def principal_form(u: Open) -> Open:
    """The same open with a single generator (principal rings only)."""
    if not u.ring.is_principal or len(u.generators) <= 1:
        return u
    d, _ = principal_generator(u.support)
    return principal_open(u.ring, d)
