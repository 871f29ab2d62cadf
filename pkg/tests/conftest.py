"""Shared pytest configuration and fixtures."""

import os
import sys
from pathlib import Path

import pytest

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

# Small corpora so that the selftest suites stay quick under pytest
os.environ.setdefault("SELFTEST__FORMULA_COUNT", "40")
os.environ.setdefault("SELFTEST__MAX_MODULUS", "24")
os.environ.setdefault("SELFTEST__CORPUS_CONFIG_PATH", str(project_root / "config" / "selftest.yaml"))

from src.rings import RingPresentation, make_ring  # noqa: E402


@pytest.fixture
def z6() -> RingPresentation:
    return make_ring("Z/6")


@pytest.fixture
def z4() -> RingPresentation:
    return make_ring("Z/4")


@pytest.fixture
def z12() -> RingPresentation:
    return make_ring("Z/12")


@pytest.fixture
def integers() -> RingPresentation:
    return make_ring("Z")


@pytest.fixture
def poly_ring() -> RingPresentation:
    """Q[x,y]/(x^2 - y), reducedness not computed."""
    return make_ring("Q[x,y]/(x^2 - y)")
