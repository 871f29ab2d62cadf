"""Abstract base class for inference rules."""

from abc import ABC, abstractmethod
from typing import Any, ClassVar

from ..derivation import Derivation
from ..models import Calculus
from ..printer import format_formula
from ..syntax import Formula, Sequent


class AxiomIndex:
    """Axioms keyed by (antecedent, succedent) for constant-time lookup."""

    def __init__(self, axioms: list[Sequent]):
        self._contexts: dict[tuple[Formula, Formula], list[frozenset[str]]] = {}
        for axiom in axioms:
            key = (axiom.antecedent, axiom.succedent)
            self._contexts.setdefault(key, []).append(frozenset(axiom.context))
        self.size = len(axioms)

    def matches(self, sequent: Sequent) -> bool:
        """An axiom with the same sides whose context is contained in the sequent's."""
        context = frozenset(sequent.context)
        candidates = self._contexts.get((sequent.antecedent, sequent.succedent), [])
        return any(c <= context for c in candidates)


class InferenceRule(ABC):
    """One rule schema.

    Attributes:
        name: Rule name used in derivation records
        description: The schema in words
        premise_count: Required number of premises (None when it depends on the node)
        calculus: Smallest calculus containing the rule
    """

    name: ClassVar[str]
    description: ClassVar[str]
    premise_count: ClassVar[int | None] = 0
    calculus: ClassVar[Calculus] = Calculus.GEOMETRIC

    @abstractmethod
    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        """Validate one node against the schema.

        Args:
            node: The node; its premises are checked separately
            axioms: Axioms available to ``axiom`` nodes

        Returns:
            None if the node is a valid instance, otherwise the reason
        """
        pass

    @classmethod
    def get_rule_info(cls) -> dict[str, Any]:
        return {
            "name": cls.name,
            "description": cls.description,
            "premises": cls.premise_count,
            "calculus": cls.calculus.value,
        }

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}(name={self.name})>"


def same_context(node: Derivation, *premises: Derivation) -> str | None:
    for premise in premises:
        if premise.conclusion.context != node.conclusion.context:
            return "premise context differs from the conclusion context"
    return None


def mismatch(what: str, expected: Formula, found: Formula) -> str:
    return f"{what}: expected {format_formula(expected)}, found {format_formula(found)}"
