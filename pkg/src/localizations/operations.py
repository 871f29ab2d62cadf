"""Equality and invertibility in A[f^-1], and concrete localizations of Z/n."""

import logging
from math import prod

from sympy import factorint
from sympy.ntheory.modular import crt

from src.ideals.membership import radical_membership
from src.ideals.models import CertificateError, Ideal
from src.ideals.quotient import ideal_quotient
from src.rings.models import MixedRingError, RingKind, UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from .models import LocalEquality, LocalInverse, LocalizedElem

logger = logging.getLogger(__name__)


def loc_equal(a: LocalizedElem, b: LocalizedElem) -> LocalEquality:
    """Decide a = b in A[f^-1].

    a = b iff f^N * (a.num * f^j - b.num * f^i) = 0 for some N, i.e. iff f lies
    in the radical of the annihilator of the cross difference.
    """
    if a.ring != b.ring or a.base != b.base:
        raise MixedRingError("Fractions over different bases cannot be compared")
    ring = a.ring
    f = a.base
    difference = a.numerator * f**b.exponent - b.numerator * f**a.exponent

    annihilator = ideal_quotient(ring, Ideal.zero(ring), Ideal(ring, [difference]))
    certificate = radical_membership(ring, annihilator, f)
    if certificate is None:
        return LocalEquality(equal=False, difference=difference)

    if not (f**certificate.exponent * difference).is_zero:
        raise CertificateError(
            f"Equality witness f^{certificate.exponent} does not kill {difference}",
            ring=ring.spec,
        )
    return LocalEquality(
        equal=True, exponent=certificate.exponent, difference=difference, certificate=certificate
    )


def loc_invertible(x: LocalizedElem) -> LocalInverse:
    """Decide whether x is a unit of A[f^-1] and construct its inverse.

    x = a/f^k is invertible iff f is in sqrt((a)). A certificate f^n = u*a gives
    the inverse u*f^k / f^n, which is re-checked with loc_equal.
    """
    ring = x.ring
    f = x.base
    certificate = radical_membership(ring, Ideal(ring, [x.numerator]), f)
    if certificate is None:
        return LocalInverse(invertible=False)

    u = certificate.cofactors[0].cofactor if certificate.cofactors else ring.zero
    inverse = LocalizedElem(f, u * f**x.exponent, certificate.exponent)
    if not loc_equal(x * inverse, LocalizedElem.of(f, 1)).equal:
        raise CertificateError(f"Constructed inverse of {x} does not verify", ring=ring.spec)
    logger.debug(f"{x} is invertible in {ring.spec}[{f}^-1] with inverse {inverse}")
    return LocalInverse(invertible=True, certificate=certificate, inverse=inverse)


def localize_modular(ring: RingPresentation, s: RingElem) -> RingPresentation:
    """Realize (Z/n)[s^-1] as Z/m, m the largest divisor of n coprime to s.

    The localization is trivial (m = 1) exactly when s is nilpotent.
    """
    if ring.kind != RingKind.MODULAR_INTEGERS:
        raise UnsupportedRingError("Concrete localization needs Z/n", ring=ring.spec)
    s = ring.element(s)
    value = int(s.value)
    factors = factorint(ring.modulus)
    m = prod(p**e for p, e in factors.items() if value % p != 0)
    return RingPresentation.modular(m)


def lift_from_localization(
    ring: RingPresentation, local: RingPresentation, value: RingElem
) -> RingElem:
    """Element of Z/n that maps to ``value`` in Z/m and to 0 in the complementary factor."""
    m = local.modulus
    rest = ring.modulus // m
    if rest == 1:
        return ring.element(int(value.value))
    if m == 1:
        return ring.zero
    solution = crt([m, rest], [int(value.value), 0])
    return ring.element(int(solution[0]))


def to_localization(local: RingPresentation, value: RingElem) -> RingElem:
    """Image of an element of Z/n in its localization Z/m."""
    return local.element(int(value.value))
