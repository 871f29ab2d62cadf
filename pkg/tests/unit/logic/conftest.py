"""Fixtures for logic tests."""

from pathlib import Path

import pytest

from src.logic import load_axioms, load_derivation

DATA = Path(__file__).parent.parent.parent / "data" / "derivations"


@pytest.fixture
def derivations_dir() -> Path:
    return DATA


@pytest.fixture
def and_commute():
    return load_derivation((DATA / "and_commute.yaml").read_text())


@pytest.fixture
def weakening_implication():
    return load_derivation((DATA / "weakening_implication.yaml").read_text())


@pytest.fixture
def cut_with_axiom():
    return load_derivation((DATA / "cut_with_axiom.yaml").read_text())


@pytest.fixture
def axioms():
    return load_axioms((DATA / "axioms.yaml").read_text())
