"""Tests for truth opens, forcing and the nabla operator on opens."""

import pytest

from src.frame import Open, all_opens, basic_open, equal, heyting, leq, verify_leq
from src.logic import nabla_translate, parse_formula
from src.oracles import brute_truth_open
from src.rings import UnsupportedRingError, make_ring
from src.semantics import (
    Verdict,
    almost_field_holds,
    forces,
    forces_double_negation,
    nabla_open,
    truth_open,
)

FIELD_AXIOM = "not (exists y. x*y = 1) => x = 0"


class TestTruthOpen:
    """Tests for the truth-open compiler."""

    def test_disjunction_of_coprime_opens(self, z6):
        """Test [[D(2) | D(3)]] is top in Z/6."""
        truth = truth_open(z6, parse_formula("D(2) | D(3)"))
        assert truth.known
        assert equal(truth.value, Open.top(z6))

    def test_invertibility_pattern(self, z6, integers):
        """Test [[exists y. 2*y = 1]] = D(2), including over Z."""
        phi = parse_formula("exists y. 2*y = 1")
        assert equal(truth_open(z6, phi).value, basic_open(z6, 2))
        assert equal(truth_open(integers, phi).value, basic_open(integers, 2))

    def test_equality(self, z12):
        """Test [[4 = 0]] = D(3), the locus where 4 dies."""
        assert equal(truth_open(z12, parse_formula("4 = 0")).value, basic_open(z12, 3))

    def test_unknown_universal_over_integers(self, integers):
        """Test a universal quantifier over Z is reported as unknown."""
        truth = truth_open(integers, parse_formula("forall x. x = 0"))
        assert not truth.known
        assert "universal" in truth.unknown_reason

    def test_matches_brute_force(self, z12):
        """Test compiled truth opens agree with the literal forcing clauses."""
        texts = [
            "not D(2)",
            "D(2) => D(3)",
            "exists y. y*y = 4",
            "forall x. x = 0 | not x = 0",
            "not not (D(2) | D(3))",
        ]
        for text in texts:
            phi = parse_formula(text)
            assert equal(truth_open(z12, phi).value, brute_truth_open(z12, phi)), text

    def test_propositional_symbol(self, z6):
        """Test a propositional symbol takes the open assigned to it."""
        truth = truth_open(z6, parse_formula("beta"), props={"beta": basic_open(z6, 3)})
        assert equal(truth.value, basic_open(z6, 3))
        assert not truth_open(z6, parse_formula("beta")).known


class TestForces:
    """Tests for the forcing judgment."""

    def test_one_does_not_force_false(self, integers):
        """Test 1 |= false fails over Z."""
        result = forces(integers, integers.one, parse_formula("false"))
        assert result.verdict == Verdict.FALSE

    def test_nilpotent_forces_false(self, z4):
        """Test 2 |= false in Z/4 with exponent 2."""
        result = forces(z4, z4.element(2), parse_formula("false"))
        assert result.verdict == Verdict.TRUE
        assert result.nilpotency_exponent == 2

    def test_positive_answer_has_certificate(self, z6):
        """Test a positive verdict carries a verifying leq certificate."""
        result = forces(z6, z6.one, parse_formula("D(2) | D(3)"))
        assert result.verdict == Verdict.TRUE
        assert verify_leq(result.certificate)

    def test_unknown(self, integers):
        """Test an uncompilable formula gives an unknown verdict."""
        result = forces(integers, integers.one, parse_formula("forall x. x = 0"))
        assert result.verdict == Verdict.UNKNOWN

    def test_field_axiom_in_reduced_ring(self, z6):
        """Test 1 forces the field axiom for every x of Z/6."""
        phi = parse_formula(FIELD_AXIOM, variables=("x",))
        for x in z6.elements():
            assert forces(z6, z6.one, phi, {"x": x}).verdict == Verdict.TRUE

    def test_field_axiom_fails_with_nilpotent(self, z4):
        """Test x = 2 in Z/4 refutes the field axiom while the almost-field form holds."""
        phi = parse_formula(FIELD_AXIOM, variables=("x",))
        assert forces(z4, z4.one, phi, {"x": z4.element(2)}).verdict == Verdict.FALSE
        assert almost_field_holds(z4, z4.element(2))

    def test_double_negation_clause(self, z12):
        """Test the unrolled double-negation clause agrees with forcing not not phi."""
        phi = parse_formula("D(2) | D(3)")
        doubled = parse_formula("not not (D(2) | D(3))")
        for f in z12.elements():
            expected = forces(z12, f, doubled).verdict
            assert forces_double_negation(z12, f, phi) == expected


class TestNabla:
    """Tests for nabla on opens and its match with the syntactic translation."""

    def test_inflationary_and_idempotent(self, z12):
        """Test U <= nabla U = nabla nabla U over every open of Z/12."""
        for u in all_opens(z12):
            once = nabla_open(z12, u)
            assert leq(u, once) is not None
            assert equal(nabla_open(z12, once), once)

    def test_reduced_ring_is_double_negation(self, z6):
        """Test nabla D(2) = D(2) in Z/6."""
        assert equal(nabla_open(z6, basic_open(z6, 2)), basic_open(z6, 2))

    def test_translation_matches_double_implication(self, z12):
        """Test [[phi^nabla]] with beta := B is (([[phi]] => B) => B) for atoms."""
        for d in (0, 1, 2, 3):
            phi = parse_formula(f"D({d})")
            for b in all_opens(z12):
                translated = truth_open(z12, nabla_translate(phi), props={"beta": b})
                base = truth_open(z12, phi).value
                assert equal(translated.value, heyting(heyting(base, b), b))

    def test_infinite_non_reduced_ring(self):
        """Test nabla is refused where it cannot be computed."""
        ring = make_ring("Q[x]/(x^2)")
        with pytest.raises(UnsupportedRingError):
            nabla_open(ring, Open.top(ring))
