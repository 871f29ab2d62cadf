"""Structural rules: identity, cut, substitution and axiom use."""

from ..derivation import Derivation
from ..models import CaptureError
from ..syntax import Bottom, Top, Var, substitute, term_vars
from .base import AxiomIndex, InferenceRule, mismatch, same_context


class IdentityRule(InferenceRule):
    name = "identity"
    description = "phi |- phi"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if c.antecedent != c.succedent:
            return mismatch("succedent", c.antecedent, c.succedent)
        return None


class CutRule(InferenceRule):
    name = "cut"
    description = "from phi |- psi and psi |- chi infer phi |- chi"
    premise_count = 2

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        left, right = (p.conclusion for p in node.premises)
        if reason := same_context(node, *node.premises):
            return reason
        if left.antecedent != c.antecedent:
            return mismatch("first premise antecedent", c.antecedent, left.antecedent)
        if right.antecedent != left.succedent:
            return mismatch("cut formula", left.succedent, right.antecedent)
        if right.succedent != c.succedent:
            return mismatch("second premise succedent", c.succedent, right.succedent)
        return None


class SubstitutionRule(InferenceRule):
    name = "substitution"
    description = "from phi |-_x psi infer phi[s/x] |-_y psi[s/x], no variable of s bound"
    premise_count = 1

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        p = node.premises[0].conclusion
        mapping = dict(node.data.get("substitution", {}))
        if set(mapping) - set(p.context):
            return f"substituted variables {sorted(set(mapping) - set(p.context))} not in premise context"
        for x in p.context:
            mapping.setdefault(x, Var(x))
        for x, t in mapping.items():
            if not term_vars(t) <= set(c.context):
                return f"term substituted for {x} uses variables outside the conclusion context"
        try:
            antecedent = substitute(p.antecedent, mapping)
            succedent = substitute(p.succedent, mapping)
        except CaptureError as e:
            return f"side condition violated: {e.message}"
        if antecedent != c.antecedent:
            return mismatch("substituted antecedent", antecedent, c.antecedent)
        if succedent != c.succedent:
            return mismatch("substituted succedent", succedent, c.succedent)
        return None


class AxiomRule(InferenceRule):
    name = "axiom"
    description = "a listed axiom, up to weakening of its context"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        if not axioms.matches(node.conclusion):
            return "sequent is not a listed axiom"
        return None


class TopIntroRule(InferenceRule):
    name = "top-intro"
    description = "phi |- true"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        if node.conclusion.succedent != Top():
            return "succedent is not true"
        return None


class BottomElimRule(InferenceRule):
    name = "bottom-elim"
    description = "false |- phi"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        if node.conclusion.antecedent != Bottom():
            return "antecedent is not false"
        return None

