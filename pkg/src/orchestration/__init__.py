"""Self-test orchestration: oracle-equivalence suites over small rings."""

from src.orchestration.selftest import SelftestRunner, SuiteStats, inv, random_formula

__all__ = [
    "SelftestRunner",
    "SuiteStats",
    "inv",
    "random_formula",
]
