"""Checked ring arithmetic and nilpotency decisions."""

import logging
from math import prod

from sympy import factorint

from config.settings import settings
from .models import (
    ArithOp,
    MixedRingError,
    NilpotencyWitness,
    ReducednessError,
    RingKind,
    SearchBudgetError,
)
from .presentation import RingElem, RingPresentation

logger = logging.getLogger(__name__)


def radical_of_integer(n: int) -> int:
    """Product of the distinct prime factors of |n| (rad(0) = 0, rad(1) = 1)."""
    if n == 0:
        return 0
    return prod(factorint(abs(n)).keys())


def nilpotency_bound(ring: RingPresentation) -> int:
    """Exponent bound after which an element of a principal ring cannot become zero.

    Prime multiplicities in n are at most log2(n), so bit_length(n) suffices.
    The configured exponent cap is not applied here.
    """
    if ring.kind == RingKind.MODULAR_INTEGERS:
        return max(1, ring.modulus.bit_length())
    return 1


def arith(ring: RingPresentation, op: ArithOp | str, args: list[RingElem]) -> RingElem:
    """Apply a ring operation after checking that all operands live in ``ring``.

    Args:
        ring: The ring
        op: One of add, mul, neg, sub, pow
        args: Operands; for pow the second argument is an int exponent

    Returns:
        Normal-form result

    Raises:
        MixedRingError: If an operand belongs to another ring
        ValueError: For a wrong number of operands or a negative exponent
    """
    op = ArithOp(op)
    elems = [a for a in args if isinstance(a, RingElem)]
    for a in elems:
        if a.ring != ring:
            raise MixedRingError(f"Operand {a!r} does not belong to {ring.spec}", ring=ring.spec)

    if op == ArithOp.NEG:
        _expect(args, 1, op)
        return -args[0]
    if op == ArithOp.POW:
        _expect(args, 2, op)
        exponent = args[1]
        if isinstance(exponent, RingElem):
            exponent = int(exponent.value)
        return args[0] ** exponent

    _expect(args, 2, op)
    a, b = args
    if op == ArithOp.ADD:
        return a + b
    if op == ArithOp.SUB:
        return a - b
    return a * b


def _expect(args: list, count: int, op: ArithOp) -> None:
    if len(args) != count:
        raise ValueError(f"{op.value} takes {count} operands, got {len(args)}")


def is_nilpotent(ring: RingPresentation, f: RingElem) -> NilpotencyWitness | None:
    """Decide nilpotency of f, returning the first exponent found.

    Integers: only 0. Modular integers: exponent search up to bit_length(n).
    Polynomial quotients: radical membership of f in the zero ideal.

    Raises:
        ReducednessError: If the ring was asserted reduced but a nonzero
            nilpotent turns up
        SearchBudgetError: If the exponent cap stops the search before the
            analytic bound and no exponent was found
    """
    f = ring.element(f)
    if f.is_zero:
        return NilpotencyWitness(element=str(f), exponent=1)

    exponent: int | None = None
    if ring.kind == RingKind.MODULAR_INTEGERS:
        analytic = nilpotency_bound(ring)
        for k in range(1, settings.search.bound(analytic) + 1):
            if pow(f.value, k, ring.modulus) == 0:
                exponent = k
                break
        if exponent is None and settings.search.truncates(analytic):
            raise SearchBudgetError(
                f"No exponent k <= {settings.search.exponent_cap} with {f}^k = 0;"
                f" the analytic bound is {analytic}",
                ring=ring.spec,
            )
    elif ring.kind == RingKind.POLYNOMIAL_QUOTIENT:
        from src.ideals.membership import radical_membership
        from src.ideals.models import Ideal

        certificate = radical_membership(ring, Ideal(ring, []), f)
        if certificate is not None:
            exponent = certificate.exponent

    if exponent is None:
        return None
    if ring.is_known_reduced:
        raise ReducednessError(
            f"Ring declared reduced but {f}^{exponent} = 0", ring=ring.spec
        )
    logger.debug(f"{f} is nilpotent in {ring.spec} with exponent {exponent}")
    return NilpotencyWitness(element=str(f), exponent=exponent)
