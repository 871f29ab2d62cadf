"""Computable commutative rings and normal-form arithmetic."""

from .arithmetic import arith, is_nilpotent, nilpotency_bound, radical_of_integer
from .models import (
    AlgebraError,
    ArithOp,
    CoefficientField,
    MixedRingError,
    NilpotencyWitness,
    Reducedness,
    ReducednessError,
    RingKind,
    RingParseError,
    SearchBudgetError,
    UnsupportedRingError,
)
from .parser import make_ring
from .presentation import RingElem, RingPresentation

__all__ = [
    "AlgebraError",
    "ArithOp",
    "CoefficientField",
    "MixedRingError",
    "NilpotencyWitness",
    "Reducedness",
    "ReducednessError",
    "RingElem",
    "RingKind",
    "RingParseError",
    "RingPresentation",
    "SearchBudgetError",
    "UnsupportedRingError",
    "arith",
    "is_nilpotent",
    "make_ring",
    "nilpotency_bound",
    "radical_of_integer",
]
