"""Rule-by-rule derivation checking."""

import logging
from functools import lru_cache

from .derivation import Derivation
from .models import Calculus, CheckResult
from .rules import AxiomIndex, RuleRegistry
from .syntax import Sequent, free_vars

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def rule_registry(calculus: Calculus) -> RuleRegistry:
    return RuleRegistry(calculus)


def well_formed(sequent: Sequent) -> str | None:
    """Reason if the sequent's sides use variables outside its context."""
    if len(set(sequent.context)) != len(sequent.context):
        return "context repeats a variable"
    stray = (free_vars(sequent.antecedent) | free_vars(sequent.succedent)) - set(sequent.context)
    if stray:
        return f"free variables {sorted(stray)} not declared in the context"
    return None


def check_derivation(
    axioms: list[Sequent] | AxiomIndex,
    derivation: Derivation,
    calculus: Calculus | str = Calculus.INTUITIONISTIC,
) -> CheckResult:
    """Check every node of a derivation against its named rule.

    Nodes are visited in pre-order, so the reported path is the first failing
    node met from the root. Accepting a derivation with axioms S implies
    accepting it with any superset of S.

    Args:
        axioms: Axioms available to ``axiom`` nodes
        derivation: The tree to check
        calculus: geometric rejects implication, universal and indexed-and rules

    Returns:
        CheckResult with ok=True, or the path, rule and reason of the failure
    """
    calculus = Calculus(calculus)
    registry = rule_registry(calculus)
    index = axioms if isinstance(axioms, AxiomIndex) else AxiomIndex(axioms)
    checked = 0

    for path, node in derivation.walk():
        checked += 1
        reason = _check_node(node, index, registry)
        if reason is not None:
            logger.debug(f"Rejected node {list(path)} ({node.rule}): {reason}")
            return CheckResult(
                ok=False, path=list(path), rule=node.rule, reason=reason, nodes_checked=checked
            )

    logger.debug(f"Accepted derivation with {checked} nodes ({calculus.value})")
    return CheckResult(ok=True, nodes_checked=checked)


def _check_node(node: Derivation, index: AxiomIndex, registry: RuleRegistry) -> str | None:
    rule = registry.get_rule(node.rule)
    if rule is None:
        if rule_registry(Calculus.INTUITIONISTIC).get_rule(node.rule) is not None:
            return f"rule {node.rule!r} is not part of the {registry.calculus.value} calculus"
        return f"unknown rule {node.rule!r}"
    if reason := well_formed(node.conclusion):
        return reason
    if rule.premise_count is not None and len(node.premises) != rule.premise_count:
        return f"expected {rule.premise_count} premises, found {len(node.premises)}"
    return rule.check(node, index)
