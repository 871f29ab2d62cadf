"""Localizations A[f^-1] with decidable equality."""

from .models import LocalEquality, LocalInverse, LocalizedElem
from .operations import (
    lift_from_localization,
    loc_equal,
    loc_invertible,
    localize_modular,
    to_localization,
)

__all__ = [
    "LocalEquality",
    "LocalInverse",
    "LocalizedElem",
    "lift_from_localization",
    "loc_equal",
    "loc_invertible",
    "localize_modular",
    "to_localization",
]
