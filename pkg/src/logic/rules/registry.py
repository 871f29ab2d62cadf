"""Rule registry keyed by rule name."""

import logging

from ..models import Calculus
from .base import InferenceRule
from .connectives import (
    AndElimLeftRule,
    AndElimRightRule,
    AndIntroRule,
    DistributivityRule,
    ImpliesAbstractRule,
    ImpliesInstantiateRule,
    IndexedAndElimRule,
    IndexedAndIntroRule,
    IndexedDistributivityRule,
    IndexedOrElimRule,
    IndexedOrIntroRule,
    OrElimRule,
    OrIntroLeftRule,
    OrIntroRightRule,
)
from .equality import EqualityReflRule, EqualitySubstRule
from .quantifiers import (
    ExistsAbstractRule,
    ExistsInstantiateRule,
    ForallAbstractRule,
    ForallInstantiateRule,
    FrobeniusRule,
)
from .structural import (
    AxiomRule,
    BottomElimRule,
    CutRule,
    IdentityRule,
    SubstitutionRule,
    TopIntroRule,
)

logger = logging.getLogger(__name__)


class RuleRegistry:
    """Rules of one calculus.

    The geometric calculus has the structural, conjunction, disjunction,
    existential, equality and mixed rules; the intuitionistic calculus adds
    implication, the universal quantifier and indexed conjunction.
    """

    def __init__(self, calculus: Calculus = Calculus.INTUITIONISTIC):
        self.calculus = calculus
        self._rules: dict[str, InferenceRule] = {}
        self._register_all_rules()

    def _register_all_rules(self) -> None:
        rules: list[InferenceRule] = [
            IdentityRule(),
            CutRule(),
            SubstitutionRule(),
            AxiomRule(),
            TopIntroRule(),
            BottomElimRule(),
            AndElimLeftRule(),
            AndElimRightRule(),
            AndIntroRule(),
            OrIntroLeftRule(),
            OrIntroRightRule(),
            OrElimRule(),
            IndexedOrIntroRule(),
            IndexedOrElimRule(),
            ExistsAbstractRule(),
            ExistsInstantiateRule(),
            DistributivityRule(),
            IndexedDistributivityRule(),
            FrobeniusRule(),
            EqualityReflRule(),
            EqualitySubstRule(),
            IndexedAndElimRule(),
            IndexedAndIntroRule(),
            ImpliesAbstractRule(),
            ImpliesInstantiateRule(),
            ForallAbstractRule(),
            ForallInstantiateRule(),
        ]
        for rule in rules:
            if self.calculus == Calculus.GEOMETRIC and rule.calculus != Calculus.GEOMETRIC:
                continue
            self._rules[rule.name] = rule
        logger.debug(f"Registered {len(self._rules)} rules for the {self.calculus.value} calculus")

    def get_rule(self, name: str) -> InferenceRule | None:
        return self._rules.get(name)

    def get_all_rules(self) -> dict[str, InferenceRule]:
        return self._rules.copy()

    def get_rule_names(self) -> list[str]:
        return list(self._rules)

    def get_all_rule_info(self) -> list[dict]:
        return [rule.get_rule_info() for rule in self._rules.values()]
