"""Integration tests: certificate-producing code against independent oracles.

These run the selftest suites on reduced corpora and a few end-to-end
chains through rings, frame, semantics, proofs and matrix algorithms.
"""

import random

import pytest

from config.settings import settings
from src.apps import Matrix, generic_freeness_simple, mccoy_regularity, richman_harness, verify_freeness
from src.frame import Open, all_opens, equal, leq, meet, negation, verify_leq
from src.logic import Calculus, check_derivation, parse_formula
from src.oracles import brute_truth_open, entailment_derivation, prime_filter_prover
from src.oracles.theory import atom_of
from src.orchestration import SelftestRunner, random_formula
from src.rings import make_ring
from src.semantics import Verdict, forces, forces_double_negation, nabla_open, truth_open

SMALL_CORPUS = {
    "entailment": {"min_modulus": 2, "max_modulus": 12, "max_generators": 2},
    "truth_open": {"moduli": [4, 6, 12], "max_depth": 2},
    "field": {"max_modulus": 20, "counterexample": {"modulus": 4, "element": 2}},
    "double_negation": {"max_modulus": 12},
    "nabla": {"moduli": [4, 6], "translation_formulas": 10},
    "derivations": {"moduli": [6]},
    "mccoy": {"moduli": [4, 6], "exhaustive_entries": 2, "samples": 10},
    "freeness": {"moduli": [6], "exhaustive_entries": 2, "samples": 10},
    "richman": {"moduli": [1, 6], "samples": 5},
}


@pytest.fixture
def runner():
    return SelftestRunner(settings, corpus=SMALL_CORPUS)


class TestSelftestSuites:
    """Every suite passes on a reduced corpus."""

    @pytest.mark.parametrize(
        "suite",
        ["truth_open", "field", "double_negation", "nabla", "derivations", "consistency", "mccoy", "freeness", "richman"],
    )
    def test_suite_passes(self, runner, suite):
        """Test the suite reports no failures."""
        (stats,) = runner.run([suite])
        assert stats.error_message is None
        assert stats.success, stats.failures[:5]
        assert stats.checks > 0

    @pytest.mark.slow
    def test_entailment_suite(self, runner):
        """Test algebra, prime filters and the prover agree up to Z/12."""
        (stats,) = runner.run(["entailment"])
        assert stats.success, stats.failures[:5]

    def test_unknown_suite(self, runner):
        """Test unknown suite names are refused."""
        with pytest.raises(ValueError):
            runner.run(["nope"])


class TestTruthOpenAgainstBruteForce:
    """Compiled truth opens against the literal forcing clauses."""

    @pytest.mark.parametrize("modulus", [4, 6, 8, 12])
    def test_random_formulas(self, modulus):
        """Test random closed formulas over Z/n."""
        ring = make_ring(f"Z/{modulus}")
        rng = random.Random(modulus)
        for _ in range(25):
            phi = random_formula(rng, modulus, 3)
            truth = truth_open(ring, phi)
            assert truth.known
            assert equal(truth.value, brute_truth_open(ring, phi))

    def test_quantified_formula(self, z12):
        """Test an existential over Z/12 expands to a finite join."""
        phi = parse_formula("exists x. D(x) & x*x = 0")
        assert equal(truth_open(z12, phi).value, brute_truth_open(z12, phi))


class TestFieldAndDoubleNegation:
    """Reduced rings are almost fields and stable under double negation at atoms."""

    @pytest.mark.parametrize("spec", ["Z/2", "Z/6", "Z/30"])
    def test_field_axiom_on_reduced_rings(self, spec):
        """Test not inv(x) => x = 0 is forced at 1 for every x."""
        ring = make_ring(spec)
        phi = parse_formula("not (exists y. x*y = 1) => x = 0", variables=("x",))
        for x in ring.elements():
            assert forces(ring, ring.one, phi, {"x": x}).verdict == Verdict.TRUE

    def test_double_negation_of_atoms(self, z12):
        """Test f forces not not D(g) exactly when D(f) <= not not D(g)."""
        for f in z12.elements():
            for g in z12.elements():
                expected = leq(Open.generated_by(z12, [f]), negation(negation(Open.generated_by(z12, [g]))))
                verdict = forces_double_negation(z12, f, parse_formula(f"D({int(g.value)})"))
                assert (verdict == Verdict.TRUE) == (expected is not None)


class TestNablaLaws:
    """The nabla modality on the opens of Z/12."""

    def test_preserves_meets(self, z12):
        """Test nabla(u & v) = nabla(u) & nabla(v) for all opens."""
        opens = all_opens(z12)
        for u in opens:
            for v in opens:
                assert equal(nabla_open(z12, meet(u, v)), meet(nabla_open(z12, u), nabla_open(z12, v)))


class TestEntailmentChains:
    """From radical membership to a checked derivation."""

    def test_z6_split(self, z6):
        """Test D(1) |- D(2) | D(3) through a certificate and through the prover."""
        certificate = leq(Open.generated_by(z6, [1]), Open.generated_by(z6, [2, 3]))
        assert verify_leq(certificate)
        chain = entailment_derivation(certificate)
        assert check_derivation(chain.theory, chain.derivation, Calculus.GEOMETRIC).ok

        proved = prime_filter_prover(z6).entails(
            frozenset({atom_of(z6.one)}), [frozenset({atom_of(z6.element(2))}), frozenset({atom_of(z6.element(3))})]
        )
        assert proved


class TestMatrixApplications:
    """The matrix algorithms agree with kernel enumeration."""

    @pytest.mark.parametrize("text", ["2", "3", "2; 3", "2 3; 4 1", "0 1; 0 5"])
    def test_mccoy_matches_kernels(self, z6, text):
        """Test regular minors coincide with injectivity over Z/6."""
        report = mccoy_regularity(z6, Matrix.parse(z6, text))
        assert report.verify()
        assert report.regular == report.injective

    def test_richman_and_freeness(self, z6):
        """Test the harness and freeness on the same presentation."""
        m = Matrix.parse(z6, "2 3")
        assert not richman_harness(z6, m).injective
        result = generic_freeness_simple(z6, m)
        assert verify_freeness(result)
