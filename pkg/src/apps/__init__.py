"""Constructive matrix algorithms with checkable certificates."""

from .freeness import generic_freeness_simple, verify_freeness
from .kernel import find_kernel_vector, zero_test_oracle
from .mccoy import kernel_from_annihilator, maximal_minors, mccoy_regularity, mccoy_trivializer
from .minors import determinant, minors
from .models import (
    FreenessResult,
    InjectivityOracle,
    Matrix,
    MatrixError,
    McCoyReport,
    OracleCertificateError,
    RichmanOutcome,
    TrivialityCertificate,
    VanishingCertificate,
)
from .richman import richman_harness, richman_trivializer

__all__ = [
    "FreenessResult",
    "InjectivityOracle",
    "Matrix",
    "MatrixError",
    "McCoyReport",
    "OracleCertificateError",
    "RichmanOutcome",
    "TrivialityCertificate",
    "VanishingCertificate",
    "determinant",
    "find_kernel_vector",
    "generic_freeness_simple",
    "kernel_from_annihilator",
    "maximal_minors",
    "mccoy_regularity",
    "mccoy_trivializer",
    "minors",
    "richman_harness",
    "richman_trivializer",
    "verify_freeness",
    "zero_test_oracle",
]
