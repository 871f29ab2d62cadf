"""Tests for prime filters, the coherent prover and entailment chains."""

import pytest

from config.settings import settings
from src.frame import Open, leq
from src.logic import Calculus, D, Or, Sequent, check_derivation, parse_formula, parse_sequent
from src.oracles import (
    CoherentProver,
    brute_truth_open,
    coherent_entails,
    entailment_derivation,
    enumerate_prime_filters,
    normalize_sequent,
    prime_filter_prover,
    prime_filter_theory,
    semantic_entails,
)
from src.oracles.brute import BruteForcer
from src.rings import UnsupportedRingError, make_ring


class TestPrimeFilters:
    """Tests for prime filter enumeration."""

    def test_filters_of_z6(self, z6):
        """Test Z/6 has the complements of (2) and (3) as prime filters."""
        carriers = sorted(sorted(pf.carrier) for pf in enumerate_prime_filters(z6))
        assert carriers == [[1, 2, 4, 5], [1, 3, 5]]

    def test_trivial_ring_has_none(self):
        """Test Z/1 has no prime filters."""
        assert enumerate_prime_filters(make_ring("Z/1")) == []

    def test_large_modulus_uses_divisors(self):
        """Test the divisor scan finds one filter per prime factor."""
        assert len(enumerate_prime_filters(make_ring("Z/60"))) == 3

    def test_infinite_ring(self, integers):
        """Test prime filters are enumerated over Z/n only."""
        with pytest.raises(UnsupportedRingError):
            enumerate_prime_filters(integers)
        with pytest.raises(UnsupportedRingError):
            brute_truth_open(integers, D(1))


class TestEntailmentAgreement:
    """Tests that algebraic, semantic and proof-theoretic entailment agree."""

    def test_three_way_agreement(self, z12):
        """Test leq, prime filters and the prover agree on all D(f) |- D(g) | D(h) in Z/12."""
        elements = list(z12.elements())
        for f in elements:
            for g in elements:
                for h in (z12.element(3), z12.element(4)):
                    algebraic = leq(Open.generated_by(z12, [f]), Open.generated_by(z12, [g, h])) is not None
                    assert semantic_entails(z12, f, [g, h]) == algebraic
                    assert coherent_entails(z12, f, [g, h]) == algebraic


class TestCoherentProver:
    """Tests for proof search in the prime-filter theory."""

    def test_proves_coprime_split(self, z6):
        """Test D(1) |- D(2) | D(3) is proved with a checked derivation."""
        goal = Sequent((), D(1), Or(D(2), D(3)))
        result = prime_filter_prover(z6).prove(goal)
        assert result.provable
        assert result.derivation.conclusion == goal
        checked = check_derivation(prime_filter_theory(z6), result.derivation, Calculus.GEOMETRIC)
        assert checked.ok, checked.describe()

    def test_unprovable_has_failing_branch(self, z6):
        """Test D(2) |- D(3) fails with a saturated branch containing D(2) and not D(3)."""
        result = prime_filter_prover(z6).prove(Sequent((), D(2), D(3)))
        assert not result.provable
        assert D(2) in result.failing_branch
        assert D(3) not in result.failing_branch

    def test_nilpotent_antecedent(self, z4):
        """Test D(2) |- false in Z/4."""
        result = prime_filter_prover(z4).prove(parse_sequent("D(2) |- false"))
        assert result.provable
        assert check_derivation(prime_filter_theory(z4), result.derivation, Calculus.GEOMETRIC).ok

    def test_custom_theory(self):
        """Test the prover runs on any coherent theory."""
        theory = [parse_sequent("D(2) |- D(3) | D(5)"), parse_sequent("D(3) |- D(5)")]
        result = CoherentProver(theory).prove(parse_sequent("D(2) |- D(5)"))
        assert result.provable
        assert check_derivation(theory, result.derivation, Calculus.GEOMETRIC).ok

    def test_normalize_sequent(self, z6):
        """Test ground atoms are rewritten to residues."""
        normalized = normalize_sequent(z6, parse_sequent("D(8) |- D(2*5) | D(-1)"))
        assert normalized == Sequent((), D(2), Or(D(4), D(5)))


class TestEntailmentChain:
    """Tests for derivations built from leq certificates."""

    def test_chain_checks(self, z6):
        """Test the chain for D(1) <= D(2, 3) checks against its axiom instances."""
        certificate = leq(Open.generated_by(z6, [1]), Open.generated_by(z6, [2, 3]))
        chain = entailment_derivation(certificate)
        assert chain.derivation.conclusion == chain.sequent
        assert check_derivation(chain.theory, chain.derivation, Calculus.GEOMETRIC).ok

    def test_chain_with_powers(self, z12):
        """Test D(6) <= D(0) needs the power steps of a nilpotent."""
        certificate = leq(Open.generated_by(z12, [6]), Open.bottom(z12))
        assert certificate is not None
        chain = entailment_derivation(certificate)
        assert check_derivation(chain.theory, chain.derivation, Calculus.GEOMETRIC).ok


class TestBruteForcer:
    """Tests for the literal forcing search."""

    def test_ignores_exponent_cap(self, mocker):
        """Test the literal search keeps the full exponent range under a low cap."""
        mocker.patch.object(settings.search, "exponent_cap", 1)
        forcer = BruteForcer(make_ring("Z/8"))
        assert forcer.bound == 4
        assert forcer.forcing_set(parse_formula("false"), {}) == frozenset({0, 2, 4, 6})
