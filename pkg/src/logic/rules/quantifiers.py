"""Double rules for the quantifiers, read in both directions, plus Frobenius."""

from ..derivation import Derivation
from ..models import Calculus
from ..syntax import And, Exists, Forall, Sequent, free_vars
from .base import AxiomIndex, InferenceRule, mismatch


def _extended(outer: Sequent, inner: Sequent, var: str) -> str | None:
    """inner's context must be outer's context plus the fresh variable ``var``."""
    if var in outer.context:
        return f"bound variable {var} clashes with the context"
    if inner.context != outer.context + (var,):
        extended = ", ".join(outer.context + (var,))
        return f"premise context must be [{extended}], found [{', '.join(inner.context)}]"
    return None


class ExistsAbstractRule(InferenceRule):
    name = "exists-abstract"
    description = "from phi |-_(x,y) psi infer exists y. phi |-_x psi"
    premise_count = 1

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        p = node.premises[0].conclusion
        if not isinstance(c.antecedent, Exists):
            return "antecedent is not an existential"
        if reason := _extended(c, p, c.antecedent.var):
            return reason
        if p.antecedent != c.antecedent.body:
            return mismatch("premise antecedent", c.antecedent.body, p.antecedent)
        if p.succedent != c.succedent:
            return mismatch("premise succedent", c.succedent, p.succedent)
        return None


class ExistsInstantiateRule(InferenceRule):
    name = "exists-instantiate"
    description = "from exists y. phi |-_x psi infer phi |-_(x,y) psi"
    premise_count = 1

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        p = node.premises[0].conclusion
        if not isinstance(p.antecedent, Exists):
            return "premise antecedent is not an existential"
        if reason := _extended(p, c, p.antecedent.var):
            return reason
        if c.antecedent != p.antecedent.body:
            return mismatch("antecedent", p.antecedent.body, c.antecedent)
        if c.succedent != p.succedent:
            return mismatch("succedent", p.succedent, c.succedent)
        return None


class ForallAbstractRule(InferenceRule):
    name = "forall-abstract"
    description = "from phi |-_(x,y) psi infer phi |-_x forall y. psi"
    premise_count = 1
    calculus = Calculus.INTUITIONISTIC

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        p = node.premises[0].conclusion
        if not isinstance(c.succedent, Forall):
            return "succedent is not a universal"
        if reason := _extended(c, p, c.succedent.var):
            return reason
        if p.antecedent != c.antecedent:
            return mismatch("premise antecedent", c.antecedent, p.antecedent)
        if p.succedent != c.succedent.body:
            return mismatch("premise succedent", c.succedent.body, p.succedent)
        return None


class ForallInstantiateRule(InferenceRule):
    name = "forall-instantiate"
    description = "from phi |-_x forall y. psi infer phi |-_(x,y) psi"
    premise_count = 1
    calculus = Calculus.INTUITIONISTIC

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        p = node.premises[0].conclusion
        if not isinstance(p.succedent, Forall):
            return "premise succedent is not a universal"
        if reason := _extended(p, c, p.succedent.var):
            return reason
        if c.antecedent != p.antecedent:
            return mismatch("antecedent", p.antecedent, c.antecedent)
        if c.succedent != p.succedent.body:
            return mismatch("succedent", p.succedent.body, c.succedent)
        return None


class FrobeniusRule(InferenceRule):
    name = "frobenius"
    description = "(exists y. phi) & psi |- exists y. (phi & psi), y not free in psi"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        a = c.antecedent
        if not (isinstance(a, And) and isinstance(a.left, Exists)):
            return "antecedent is not of the form (exists y. phi) & psi"
        var = a.left.var
        if var in c.context or var in free_vars(a.right):
            return f"variable {var} is not fresh for the context and psi"
        expected = Exists(var, And(a.left.body, a.right))
        if c.succedent != expected:
            return mismatch("succedent", expected, c.succedent)
        return None
