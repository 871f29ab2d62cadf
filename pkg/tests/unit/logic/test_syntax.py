"""Tests for parsing, printing and fragment classification."""

import pytest

from src.logic import (
    And,
    Bottom,
    Exists,
    Fragment,
    FormulaSyntaxError,
    Implies,
    Or,
    Prop,
    SortError,
    UnboundVariableError,
    D,
    classify,
    format_formula,
    format_sequent,
    free_vars,
    parse_formula,
    parse_sequent,
)


class TestParser:
    """Tests for the formula grammar."""

    def test_atoms_and_connectives(self):
        """Test precedence of & over | and right-associative =>."""
        phi = parse_formula("D(2) & D(3) | D(5) => D(7) => false")
        assert phi == Implies(Or(And(D(2), D(3)), D(5)), Implies(D(7), Bottom()))

    def test_not_is_implication_to_false(self):
        """Test not phi is phi => false."""
        assert parse_formula("not D(2)") == Implies(D(2), Bottom())

    def test_quantifier_binds_variable(self):
        """Test the bound variable resolves inside the body."""
        phi = parse_formula("exists y. 2*y = 1")
        assert isinstance(phi, Exists)
        assert free_vars(phi) == frozenset()

    def test_free_variables_must_be_declared(self):
        """Test an undeclared identifier is rejected."""
        with pytest.raises(UnboundVariableError):
            parse_formula("x = 0")
        assert free_vars(parse_formula("x = 0", variables=("x",))) == {"x"}

    def test_ring_constants(self):
        """Test indeterminates of the ring parse as constants."""
        phi = parse_formula("D(x)", constants=("x",))
        assert free_vars(phi) == frozenset()

    def test_unknown_sort(self):
        """Test only the ring sort exists."""
        with pytest.raises(SortError):
            parse_formula("exists y:B. y = 0")

    def test_syntax_error(self):
        """Test malformed input raises FormulaSyntaxError."""
        for text in ["D(2", "D(2) &", "2 = = 3", "D(2) $ D(3)"]:
            with pytest.raises(FormulaSyntaxError):
                parse_formula(text)

    def test_nabla_sugar(self):
        """Test nabla(phi) expands to (phi => beta) => beta."""
        beta = Prop("beta")
        assert parse_formula("nabla(D(2))") == Implies(Implies(D(2), beta), beta)

    def test_indexed_disjunction(self):
        """Test Or[i in 1..3](D(i)) expands to three disjuncts."""
        phi = parse_formula("Or[i in 1..3](D(i))")
        assert format_formula(phi) == "Or{D(1), D(2), D(3)}"


class TestPrinter:
    """Tests for canonical printing."""

    def test_round_trip(self):
        """Test printing then parsing returns the same tree."""
        texts = [
            "D(2) & (D(3) | D(5))",
            "(D(2) => D(3)) => D(5)",
            "exists y:A. 2*y = 1 & D(y)",
            "forall x:A. x = 0 | not x = 0",
            "nabla(D(2) | D(3))",
        ]
        for text in texts:
            phi = parse_formula(text)
            assert parse_formula(format_formula(phi)) == phi

    def test_abbreviation(self):
        """Test the nabla pattern prints abbreviated only on request."""
        phi = parse_formula("nabla(D(2))")
        assert format_formula(phi, abbreviate=True) == "nabla(D(2))"
        assert format_formula(phi) == "(D(2) => beta) => beta"

    def test_sequent(self):
        """Test sequents print with their context."""
        sequent = parse_sequent("[x:A] x = 0 |- D(x) => false")
        assert format_sequent(sequent) == "[x:A] x = 0 |- not D(x)"


class TestFragments:
    """Tests for fragment classification."""

    def test_classify(self):
        """Test the three fragments."""
        assert classify(parse_formula("D(2) | D(3) & D(5)")) == Fragment.COHERENT
        assert classify(parse_formula("exists y. D(y)")) == Fragment.GEOMETRIC
        assert classify(parse_formula("not D(2)")) == Fragment.FIRST_ORDER
