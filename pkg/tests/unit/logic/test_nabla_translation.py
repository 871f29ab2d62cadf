"""Tests for the syntactic nabla translation."""

import pytest

from src.logic import (
    Implies,
    Prop,
    ReservedSymbolError,
    D,
    format_formula,
    nabla,
    nabla_translate,
    parse_formula,
    unguarded_positive,
)


class TestNablaTranslate:
    """Tests for nabla_translate."""

    def test_atom_is_wrapped(self):
        """Test atoms become nabla(atom)."""
        assert nabla_translate(D(2)) == nabla(D(2))

    def test_disjunction(self):
        """Test disjunctions are translated inside and wrapped."""
        translated = nabla_translate(parse_formula("D(2) | D(3)"))
        assert format_formula(translated, abbreviate=True) == "nabla(nabla(D(2)) | nabla(D(3)))"

    def test_true_and_conjunction_commute(self):
        """Test true is unchanged and conjunction translates componentwise."""
        assert nabla_translate(parse_formula("true")) == parse_formula("true")
        translated = nabla_translate(parse_formula("D(2) & true"))
        assert format_formula(translated, abbreviate=True) == "nabla(D(2)) & true"

    def test_existential(self):
        """Test existentials are wrapped after translating the body."""
        translated = nabla_translate(parse_formula("exists y. 2*y = 1"))
        assert format_formula(translated, abbreviate=True) == "nabla(exists y:A. nabla(2*y = 1))"

    def test_false_is_wrapped(self):
        """Test false becomes nabla(false)."""
        assert format_formula(nabla_translate(parse_formula("false")), abbreviate=True) == "nabla(false)"

    def test_custom_answer_symbol(self):
        """Test another answer symbol can be chosen."""
        translated = nabla_translate(D(2), beta_symbol="r")
        assert translated == Implies(Implies(D(2), Prop("r")), Prop("r"))

    def test_reserved_symbol(self):
        """Test the answer symbol may not already occur."""
        with pytest.raises(ReservedSymbolError):
            nabla_translate(parse_formula("beta | D(2)"))

    def test_no_unguarded_positive_subformulas(self):
        """Test every disjunction and existential of a translation sits under nabla."""
        phi = parse_formula("forall x. (x = 0 | exists y. x*y = 1) => D(x) | not D(x)")
        assert unguarded_positive(phi)
        assert unguarded_positive(nabla_translate(phi)) == []
