"""Syntactic fragment classification."""

from .models import Fragment
from .syntax import And, BigAnd, BigOr, Exists, Forall, Formula, Implies, Or


def _is_geometric(phi: Formula) -> bool:
    if isinstance(phi, (Implies, Forall)):
        return False
    if isinstance(phi, (And, Or)):
        return _is_geometric(phi.left) and _is_geometric(phi.right)
    if isinstance(phi, (BigAnd, BigOr)):
        return all(_is_geometric(p) for p in phi.items)
    if isinstance(phi, Exists):
        return _is_geometric(phi.body)
    return True


def _is_coherent(phi: Formula) -> bool:
    """Quantifier-free with binary disjunctions only; assumes phi is geometric."""
    if isinstance(phi, (Exists, BigOr)):
        return False
    if isinstance(phi, (And, Or)):
        return _is_coherent(phi.left) and _is_coherent(phi.right)
    if isinstance(phi, BigAnd):
        return all(_is_coherent(p) for p in phi.items)
    return True


def classify(phi: Formula) -> Fragment:
    """Smallest fragment containing phi.

    geometric: no implication (hence no negation) and no universal quantifier.
    coherent: geometric, quantifier-free and only binary disjunctions, the
    propositional fragment the coherent prover decides.
    """
    if not _is_geometric(phi):
        return Fragment.FIRST_ORDER
    if _is_coherent(phi):
        return Fragment.COHERENT
    return Fragment.GEOMETRIC


def classify_sequent(antecedent: Formula, succedent: Formula) -> Fragment:
    """Fragment of a sequent: the larger of its two sides."""
    order = list(Fragment)
    return max(classify(antecedent), classify(succedent), key=order.index)
