"""Tests for the derivation checker and the YAML derivation format."""

from dataclasses import replace

import pytest

from src.logic import (
    Calculus,
    Derivation,
    DerivationFormatError,
    check_derivation,
    dump_derivation,
    load_derivation,
    parse_sequent,
)


class TestGoldenDerivations:
    """Tests for hand-written derivations."""

    def test_and_commute(self, and_commute):
        """Test a purely structural derivation is accepted by both calculi."""
        for calculus in Calculus:
            result = check_derivation([], and_commute, calculus)
            assert result.ok, result.describe()
        assert result.nodes_checked == 3

    def test_implication_only_intuitionistic(self, weakening_implication):
        """Test implication rules are outside the geometric calculus."""
        assert check_derivation([], weakening_implication, Calculus.INTUITIONISTIC).ok
        result = check_derivation([], weakening_implication, Calculus.GEOMETRIC)
        assert not result.ok
        assert result.path == []
        assert "not part of the geometric calculus" in result.reason

    def test_axiom_required(self, cut_with_axiom, axioms):
        """Test axiom nodes need the axiom to be listed."""
        assert check_derivation(axioms, cut_with_axiom, Calculus.GEOMETRIC).ok
        result = check_derivation([], cut_with_axiom, Calculus.GEOMETRIC)
        assert not result.ok
        assert result.path == [0]
        assert result.rule == "axiom"

    def test_axiom_monotonicity(self, cut_with_axiom, axioms):
        """Test accepting with axioms S implies accepting with a superset."""
        extra = axioms + [parse_sequent("D(2) |- D(4)")]
        assert check_derivation(extra, cut_with_axiom).ok


class TestMutations:
    """Tests that single-node corruptions are caught at the right path."""

    def test_wrong_conclusion(self, and_commute):
        """Test swapping a premise conclusion is rejected at the root."""
        left, right = and_commute.premises
        mutated = replace(and_commute, premises=(right, left))
        result = check_derivation([], mutated)
        assert not result.ok
        assert result.path == []

    def test_wrong_rule_name(self, and_commute):
        """Test a premise claiming the wrong elimination rule is rejected at its path."""
        left, right = and_commute.premises
        mutated = replace(and_commute, premises=(replace(left, rule="and-elim-left"), right))
        result = check_derivation([], mutated)
        assert not result.ok
        assert result.path == [0]

    def test_unknown_rule(self, and_commute):
        """Test an unknown rule name is reported."""
        result = check_derivation([], replace(and_commute, rule="magic"))
        assert not result.ok
        assert "unknown rule" in result.reason

    def test_missing_premise(self, and_commute):
        """Test a premise count mismatch is reported."""
        result = check_derivation([], replace(and_commute, premises=and_commute.premises[:1]))
        assert not result.ok
        assert "premises" in result.reason

    def test_stray_free_variable(self):
        """Test conclusions must declare their free variables."""
        node = Derivation(rule="identity", conclusion=parse_sequent("[x:A] x = 0 |- x = 0"))
        assert check_derivation([], node).ok
        stray = replace(node, conclusion=replace(node.conclusion, context=()))
        result = check_derivation([], stray)
        assert not result.ok
        assert "free variables" in result.reason


class TestDerivationFormat:
    """Tests for loading and dumping derivations."""

    def test_dump_and_load(self, and_commute):
        """Test a dumped derivation loads back to the same tree."""
        assert load_derivation(dump_derivation(and_commute)) == and_commute

    def test_bad_yaml(self):
        """Test malformed documents raise DerivationFormatError."""
        for text in ["rule: [", "- not a mapping", "rule: identity", "rule: identity\nconclusion: 'D(2) |-'"]:
            with pytest.raises(DerivationFormatError):
                load_derivation(text)

    def test_unknown_keys(self):
        """Test unknown node keys are rejected."""
        with pytest.raises(DerivationFormatError):
            load_derivation("rule: identity\nconclusion: 'D(2) |- D(2)'\nnote: hi")
