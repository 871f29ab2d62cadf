"""Forcing semantics over a ring: truth opens, forcing, nabla and certificates."""

from .certificates import (
    certificate_from_record,
    certificate_to_record,
    certify_forcing,
    check_forcing_certificate,
    verify_partition,
)
from .evaluation import evaluate_local, evaluate_term, rebase
from .models import (
    BranchCertificate,
    ForcingCertificate,
    ForcingCertificateError,
    ForcingResult,
    Partition,
    TruthOpen,
    Verdict,
    Witness,
)
from .nabla import nabla_open
from .patterns import ExistentialPattern, PatternRegistry, pattern_registry
from .truth import (
    almost_field_holds,
    equality_open,
    forces,
    forces_double_negation,
    open_contains,
    truth_open,
)

__all__ = [
    "BranchCertificate",
    "ExistentialPattern",
    "ForcingCertificate",
    "ForcingCertificateError",
    "ForcingResult",
    "Partition",
    "PatternRegistry",
    "TruthOpen",
    "Verdict",
    "Witness",
    "almost_field_holds",
    "certificate_from_record",
    "certificate_to_record",
    "certify_forcing",
    "check_forcing_certificate",
    "equality_open",
    "evaluate_local",
    "evaluate_term",
    "forces",
    "forces_double_negation",
    "nabla_open",
    "open_contains",
    "pattern_registry",
    "rebase",
    "truth_open",
    "verify_partition",
]
