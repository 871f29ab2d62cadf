"""The frame Rad(A) of radical ideals, i.e. the opens of Spec(A)."""

from .models import LeqCertificate, Open
from .operations import (
    all_opens,
    basic_open,
    equal,
    heyting,
    is_dense,
    is_trivial_frame,
    join,
    join_all,
    leq,
    meet,
    meet_all,
    negation,
    principal_form,
    principal_open,
    radical_support,
    verify_leq,
)

__all__ = [
    "LeqCertificate",
    "Open",
    "all_opens",
    "basic_open",
    "equal",
    "heyting",
    "is_dense",
    "is_trivial_frame",
    "join",
    "join_all",
    "leq",
    "meet",
    "meet_all",
    "negation",
    "principal_form",
    "principal_open",
    "radical_support",
    "verify_leq",
]
