"""Finitely generated ideals, Gröbner machinery and membership certificates."""

from .groebner import groebner_basis
from .membership import (
    ideal_contains,
    ideal_membership,
    ideals_equal,
    radical_membership,
    verify_membership,
)
from .models import (
    CertificateError,
    CertificateRecord,
    CofactorTerm,
    Ideal,
    MembershipCertificate,
    SaturationResult,
)
from .principal import principal_generator
from .quotient import annihilator_saturation, ideal_quotient

__all__ = [
    "CertificateError",
    "CertificateRecord",
    "CofactorTerm",
    "Ideal",
    "MembershipCertificate",
    "SaturationResult",
    "annihilator_saturation",
    "groebner_basis",
    "ideal_contains",
    "ideal_membership",
    "ideal_quotient",
    "ideals_equal",
    "principal_generator",
    "radical_membership",
    "verify_membership",
]
