"""Tests for the golden derivation corpus and its single-node corruptions."""

from dataclasses import replace
from pathlib import Path
from typing import Callable, Iterator

import pytest

from src.frame import Open, leq
from src.logic import (
    And,
    Calculus,
    Derivation,
    Var,
    check_derivation,
    load_axioms,
    load_derivation,
    parse_formula,
    parse_sequent,
    rule_registry,
)
from src.oracles import entailment_derivation
from src.rings import make_ring

DATA = Path(__file__).parent.parent.parent / "data" / "derivations"

# Smallest calculus each file is meant to check in
GOLDEN = {
    "and_commute.yaml": Calculus.GEOMETRIC,
    "cut_with_axiom.yaml": Calculus.GEOMETRIC,
    "distribute_and_project.yaml": Calculus.GEOMETRIC,
    "equality_subst.yaml": Calculus.GEOMETRIC,
    "frobenius_exists.yaml": Calculus.GEOMETRIC,
    "indexed_conjunction.yaml": Calculus.INTUITIONISTIC,
    "indexed_disjunction.yaml": Calculus.GEOMETRIC,
    "instantiate_reflexivity.yaml": Calculus.INTUITIONISTIC,
    "modus_ponens.yaml": Calculus.INTUITIONISTIC,
    "or_commute.yaml": Calculus.GEOMETRIC,
    "top_bottom.yaml": Calculus.GEOMETRIC,
    "weakening_implication.yaml": Calculus.INTUITIONISTIC,
}

CHAINS = [
    ("Z/6", [1], [2, 3]),
    ("Z/12", [6], []),
    ("Z/30", [6, 10], [2]),
    ("Z", [6], [12]),
]

MARKER = parse_formula("D(7)")

# The equality-subst conclusion of equality_subst.yaml with its binder z renamed to y
CAPTURED = "[x, y] (x = y) & (exists y. y * x = 1) |- exists y. y * y = 1"

ALL_RULES = rule_registry(Calculus.INTUITIONISTIC).get_rule_names()


def load_golden(name: str) -> Derivation:
    return load_derivation((DATA / name).read_text())


def golden_axioms():
    return load_axioms((DATA / "axioms.yaml").read_text())


def _rewrite(
    d: Derivation, path: tuple[int, ...], change: Callable[[Derivation], Derivation]
) -> Derivation:
    if not path:
        return change(d)
    premises = list(d.premises)
    premises[path[0]] = _rewrite(premises[path[0]], path[1:], change)
    return replace(d, premises=tuple(premises))


def single_node_mutations(
    derivation: Derivation, leaf_renames: bool = True
) -> Iterator[tuple[str, Derivation]]:
    """Every tree that differs from ``derivation`` at exactly one node.

    A node is renamed to each other rule, loses one premise, or has one side
    of its conclusion widened to ``side & D(7)``.
    """
    for path, node in derivation.walk():
        where = list(path)
        if node.premises or leaf_renames:
            for name in ALL_RULES:
                if name != node.rule:
                    yield (
                        f"{where} renamed {node.rule} -> {name}",
                        _rewrite(derivation, path, lambda n, name=name: replace(n, rule=name)),
                    )
        for i in range(len(node.premises)):
            yield (
                f"{where} without premise {i}",
                _rewrite(
                    derivation,
                    path,
                    lambda n, i=i: replace(n, premises=n.premises[:i] + n.premises[i + 1 :]),
                ),
            )
        for side in ("antecedent", "succedent"):
            yield (
                f"{where} {side} widened",
                _rewrite(
                    derivation,
                    path,
                    lambda n, side=side: replace(
                        n,
                        conclusion=replace(
                            n.conclusion, **{side: And(getattr(n.conclusion, side), MARKER)}
                        ),
                    ),
                ),
            )


def surviving(axioms, derivation: Derivation, leaf_renames: bool = True) -> list[str]:
    """Labels of the mutations that the checker still accepts."""
    return [
        label
        for label, mutant in single_node_mutations(derivation, leaf_renames)
        if check_derivation(axioms, mutant, Calculus.INTUITIONISTIC).ok
    ]


def chain_for(spec: str, lower: list[int], upper: list[int]):
    ring = make_ring(spec)
    certificate = leq(Open.generated_by(ring, lower), Open.generated_by(ring, upper))
    assert certificate is not None
    return entailment_derivation(certificate)


class TestGoldenCorpus:
    """Tests that the hand-written derivations check and cover every rule."""

    @pytest.mark.parametrize("name", sorted(GOLDEN))
    def test_accepted(self, name):
        """Test each golden derivation checks in its own calculus."""
        result = check_derivation(golden_axioms(), load_golden(name), GOLDEN[name])
        assert result.ok, result.describe()

    def test_covers_every_rule(self):
        """Test every registered rule is used somewhere in the corpus."""
        used = {node.rule for name in GOLDEN for _, node in load_golden(name).walk()}
        assert used == set(ALL_RULES)
        assert len(ALL_RULES) == 27

    def test_intuitionistic_files_need_the_larger_calculus(self):
        """Test files tagged intuitionistic are refused by the geometric calculus."""
        for name, calculus in GOLDEN.items():
            if calculus == Calculus.INTUITIONISTIC:
                result = check_derivation(golden_axioms(), load_golden(name), Calculus.GEOMETRIC)
                assert not result.ok, name


class TestSingleNodeMutations:
    """Tests that every one-node corruption of a valid derivation is rejected."""

    @pytest.mark.parametrize("name", sorted(GOLDEN))
    def test_golden_mutations_rejected(self, name):
        """Test renamed rules, dropped premises and widened formulas are all caught."""
        assert surviving(golden_axioms(), load_golden(name)) == []

    @pytest.mark.parametrize("spec,lower,upper", CHAINS)
    def test_entailment_chain_mutations_rejected(self, spec, lower, upper):
        """Test corruptions of a derivation built from a leq certificate are caught.

        Leaves are not renamed here: a chain may hold an axiom instance such as
        D(3) |- D(3) that is also an identity.
        """
        chain = chain_for(spec, lower, upper)
        assert check_derivation(chain.theory, chain.derivation, Calculus.GEOMETRIC).ok
        assert surviving(chain.theory, chain.derivation, leaf_renames=False) == []

    def test_mutation_count(self):
        """Test the generator yields one rename per other rule for every node."""
        derivation = load_golden("and_commute.yaml")
        mutations = list(single_node_mutations(derivation))
        # 3 nodes x 26 renames, 2 dropped premises, 3 nodes x 2 widened sides
        assert len(mutations) == 3 * 26 + 2 + 3 * 2


class TestEqualityCapture:
    """Tests for the bound-variable side conditions of substitution rules."""

    def test_golden_instance_with_binder(self):
        """Test equality-subst goes under a binder that does not capture."""
        node = load_golden("equality_subst.yaml").premises[0]
        assert node.rule == "equality-subst"
        assert check_derivation([], node, Calculus.GEOMETRIC).ok

    def test_bound_target_is_captured(self):
        """Test renaming the golden binder to y makes y = x capture and fails."""
        node = Derivation(rule="equality-subst", conclusion=parse_sequent(CAPTURED))
        result = check_derivation([], node, Calculus.GEOMETRIC)
        assert not result.ok
        assert result.path == []
        assert "side condition" in result.reason

    def test_captured_in_golden_tree(self):
        """Test renaming the binder throughout the golden tree fails only at the substitution."""
        text = (DATA / "equality_subst.yaml").read_text().replace("exists z. z", "exists y. y")
        mutated = load_derivation(text)
        assert mutated.premises[0].conclusion == parse_sequent(CAPTURED)
        result = check_derivation([], mutated, Calculus.GEOMETRIC)
        assert not result.ok
        assert result.path == [0]
        assert result.rule == "equality-subst"

    def test_bound_variable_not_substituted(self):
        """Test a binder for the substituted variable itself shields it."""
        node = Derivation(
            rule="equality-subst",
            conclusion=parse_sequent("[x, y] (x = y) & (exists x. x = 1) |- exists x. x = 1"),
        )
        assert check_derivation([], node, Calculus.GEOMETRIC).ok

    def test_substitution_rule_capture(self):
        """Test the substitution rule refuses a term captured by a binder."""
        premise = Derivation(
            rule="identity", conclusion=parse_sequent("[x] exists y. y = x |- exists y. y = x")
        )
        node = Derivation(
            rule="substitution",
            conclusion=parse_sequent("[y] exists y. y = y |- exists y. y = y"),
            premises=(premise,),
            data={"substitution": {"x": Var("y")}},
        )
        result = check_derivation([], node, Calculus.GEOMETRIC)
        assert not result.ok
        assert result.path == []
        assert "side condition" in result.reason
