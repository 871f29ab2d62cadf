"""Equality rules."""

from ..derivation import Derivation
from ..models import CaptureError
from ..syntax import And, Eq, Formula, Term, Top, Var, substitute
from .base import AxiomIndex, InferenceRule, mismatch


class EqualityReflRule(InferenceRule):
    name = "equality-refl"
    description = "true |- t = t"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if c.antecedent != Top():
            return "antecedent is not true"
        if not isinstance(c.succedent, Eq) or c.succedent.left != c.succedent.right:
            return "succedent is not of the form t = t"
        return None


def _variable_pairs(phi: Formula) -> list[tuple[str, str]] | None:
    if isinstance(phi, Top):
        return []
    if isinstance(phi, Eq):
        if isinstance(phi.left, Var) and isinstance(phi.right, Var):
            return [(phi.left.name, phi.right.name)]
        return None
    if isinstance(phi, And):
        left, right = _variable_pairs(phi.left), _variable_pairs(phi.right)
        if left is None or right is None:
            return None
        return left + right
    return None


class EqualitySubstRule(InferenceRule):
    name = "equality-subst"
    description = "(x = y) & phi |- phi[y/x], y not bound in phi"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.antecedent, And):
            return "antecedent is not of the form (x = y) & phi"
        pairs = _variable_pairs(c.antecedent.left)
        if pairs is None:
            return "left conjunct is not a conjunction of variable equations"
        sources = [x for x, _ in pairs]
        if len(set(sources)) != len(sources):
            return "a variable is substituted twice"
        mapping: dict[str, Term] = {x: Var(y) for x, y in pairs}
        try:
            expected = substitute(c.antecedent.right, mapping)
        except CaptureError as e:
            return f"side condition violated: {e.message}"
        if c.succedent != expected:
            return mismatch("succedent", expected, c.succedent)
        return None
