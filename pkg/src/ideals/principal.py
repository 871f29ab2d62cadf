"""Ideal arithmetic in the principal ideal rings Z and Z/n via extended gcd."""

from sympy.core.intfunc import igcdex

from src.rings.models import RingKind, UnsupportedRingError
from src.rings.presentation import RingPresentation
from .models import Ideal


def bezout(values: list[int]) -> tuple[int, list[int]]:
    """gcd of a list of integers together with Bezout coefficients.

    Returns:
        (g, coeffs) with g = sum(c * v) and g >= 0 (g = 0 for the empty list)
    """
    g = 0
    coeffs: list[int] = []
    for v in values:
        x, y, g_new = igcdex(g, v)
        coeffs = [c * x for c in coeffs] + [y]
        g = g_new
    return int(g), [int(c) for c in coeffs]


def principal_generator(ideal: Ideal) -> tuple[int, list[int]]:
    """Single generator d of an ideal of Z or Z/n with its Bezout expression.

    In Z, d >= 0 (d = 0 is the zero ideal). In Z/n, d divides n and d = n
    stands for the zero ideal; the coefficient of n is dropped since n = 0.

    Returns:
        (d, coeffs) with d = sum(coeffs[i] * generators[i]) in the ring
    """
    ring = ideal.ring
    values = [int(g.value) for g in ideal.generators]
    if ring.kind == RingKind.INTEGERS:
        return bezout(values)
    if ring.kind == RingKind.MODULAR_INTEGERS:
        d, coeffs = bezout(values + [ring.modulus])
        return d, coeffs[:-1]
    raise UnsupportedRingError("Not a principal ideal ring", ring=ring.spec)


def principal_ideal(ring: RingPresentation, d: int) -> Ideal:
    """The ideal (d); the zero ideal is returned with no generators."""
    elem = ring.element(d)
    if elem.is_zero:
        return Ideal.zero(ring)
    return Ideal(ring, [elem])


def divides(ring: RingPresentation, d: int, value: int) -> bool:
    """Whether value lies in (d), for d as returned by principal_generator."""
    if ring.kind == RingKind.INTEGERS and d == 0:
        return value == 0
    return value % d == 0
