"""Rules for conjunction, disjunction, implication and the two mixed rules."""

from ..derivation import Derivation
from ..models import Calculus
from ..syntax import And, BigAnd, BigOr, Implies, Or
from .base import AxiomIndex, InferenceRule, mismatch, same_context


class AndElimLeftRule(InferenceRule):
    name = "and-elim-left"
    description = "phi & psi |- phi"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.antecedent, And):
            return "antecedent is not a conjunction"
        if c.succedent != c.antecedent.left:
            return mismatch("succedent", c.antecedent.left, c.succedent)
        return None


class AndElimRightRule(InferenceRule):
    name = "and-elim-right"
    description = "phi & psi |- psi"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.antecedent, And):
            return "antecedent is not a conjunction"
        if c.succedent != c.antecedent.right:
            return mismatch("succedent", c.antecedent.right, c.succedent)
        return None


class AndIntroRule(InferenceRule):
    name = "and-intro"
    description = "from phi |- psi and phi |- chi infer phi |- psi & chi"
    premise_count = 2

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        left, right = (p.conclusion for p in node.premises)
        if reason := same_context(node, *node.premises):
            return reason
        for premise in (left, right):
            if premise.antecedent != c.antecedent:
                return mismatch("premise antecedent", c.antecedent, premise.antecedent)
        expected = And(left.succedent, right.succedent)
        if c.succedent != expected:
            return mismatch("succedent", expected, c.succedent)
        return None


class IndexedAndElimRule(InferenceRule):
    name = "indexed-and-elim"
    description = "And{phi_i} |- phi_k"
    calculus = Calculus.INTUITIONISTIC

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.antecedent, BigAnd):
            return "antecedent is not an indexed conjunction"
        k = node.data.get("index")
        if not isinstance(k, int) or not 0 <= k < len(c.antecedent.items):
            return f"index {k!r} out of range"
        if c.succedent != c.antecedent.items[k]:
            return mismatch("succedent", c.antecedent.items[k], c.succedent)
        return None


class IndexedAndIntroRule(InferenceRule):
    name = "indexed-and-intro"
    description = "from phi |- psi_i for every i infer phi |- And{psi_i}"
    premise_count = None
    calculus = Calculus.INTUITIONISTIC

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.succedent, BigAnd):
            return "succedent is not an indexed conjunction"
        if len(node.premises) != len(c.succedent.items):
            return f"expected {len(c.succedent.items)} premises, found {len(node.premises)}"
        if reason := same_context(node, *node.premises):
            return reason
        for item, premise in zip(c.succedent.items, node.premises):
            p = premise.conclusion
            if p.antecedent != c.antecedent:
                return mismatch("premise antecedent", c.antecedent, p.antecedent)
            if p.succedent != item:
                return mismatch("premise succedent", item, p.succedent)
        return None


class OrIntroLeftRule(InferenceRule):
    name = "or-intro-left"
    description = "phi |- phi | psi"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.succedent, Or):
            return "succedent is not a disjunction"
        if c.antecedent != c.succedent.left:
            return mismatch("antecedent", c.succedent.left, c.antecedent)
        return None


class OrIntroRightRule(InferenceRule):
    name = "or-intro-right"
    description = "psi |- phi | psi"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.succedent, Or):
            return "succedent is not a disjunction"
        if c.antecedent != c.succedent.right:
            return mismatch("antecedent", c.succedent.right, c.antecedent)
        return None


class OrElimRule(InferenceRule):
    name = "or-elim"
    description = "from phi |- chi and psi |- chi infer phi | psi |- chi"
    premise_count = 2

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.antecedent, Or):
            return "antecedent is not a disjunction"
        if reason := same_context(node, *node.premises):
            return reason
        for side, premise in zip((c.antecedent.left, c.antecedent.right), node.premises):
            p = premise.conclusion
            if p.antecedent != side:
                return mismatch("premise antecedent", side, p.antecedent)
            if p.succedent != c.succedent:
                return mismatch("premise succedent", c.succedent, p.succedent)
        return None


class IndexedOrIntroRule(InferenceRule):
    name = "indexed-or-intro"
    description = "phi_k |- Or{phi_i}"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.succedent, BigOr):
            return "succedent is not an indexed disjunction"
        k = node.data.get("index")
        if not isinstance(k, int) or not 0 <= k < len(c.succedent.items):
            return f"index {k!r} out of range"
        if c.antecedent != c.succedent.items[k]:
            return mismatch("antecedent", c.succedent.items[k], c.antecedent)
        return None


class IndexedOrElimRule(InferenceRule):
    name = "indexed-or-elim"
    description = "from phi_i |- chi for every i infer Or{phi_i} |- chi"
    premise_count = None

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        if not isinstance(c.antecedent, BigOr):
            return "antecedent is not an indexed disjunction"
        if len(node.premises) != len(c.antecedent.items):
            return f"expected {len(c.antecedent.items)} premises, found {len(node.premises)}"
        if reason := same_context(node, *node.premises):
            return reason
        for item, premise in zip(c.antecedent.items, node.premises):
            p = premise.conclusion
            if p.antecedent != item:
                return mismatch("premise antecedent", item, p.antecedent)
            if p.succedent != c.succedent:
                return mismatch("premise succedent", c.succedent, p.succedent)
        return None


class DistributivityRule(InferenceRule):
    name = "distributivity"
    description = "(phi | psi) & chi |- (phi & chi) | (psi & chi)"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        a = c.antecedent
        if not (isinstance(a, And) and isinstance(a.left, Or)):
            return "antecedent is not of the form (phi | psi) & chi"
        expected = Or(And(a.left.left, a.right), And(a.left.right, a.right))
        if c.succedent != expected:
            return mismatch("succedent", expected, c.succedent)
        return None


class IndexedDistributivityRule(InferenceRule):
    name = "indexed-distributivity"
    description = "Or{phi_i} & chi |- Or{phi_i & chi}"

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        a = c.antecedent
        if not (isinstance(a, And) and isinstance(a.left, BigOr)):
            return "antecedent is not of the form Or{phi_i} & chi"
        expected = BigOr(tuple(And(item, a.right) for item in a.left.items))
        if c.succedent != expected:
            return mismatch("succedent", expected, c.succedent)
        return None


class ImpliesAbstractRule(InferenceRule):
    name = "implies-abstract"
    description = "from phi & psi |- chi infer phi |- psi => chi"
    premise_count = 1
    calculus = Calculus.INTUITIONISTIC

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        p = node.premises[0].conclusion
        if reason := same_context(node, *node.premises):
            return reason
        if not isinstance(c.succedent, Implies):
            return "succedent is not an implication"
        expected = And(c.antecedent, c.succedent.left)
        if p.antecedent != expected:
            return mismatch("premise antecedent", expected, p.antecedent)
        if p.succedent != c.succedent.right:
            return mismatch("premise succedent", c.succedent.right, p.succedent)
        return None


class ImpliesInstantiateRule(InferenceRule):
    name = "implies-instantiate"
    description = "from phi |- psi => chi infer phi & psi |- chi"
    premise_count = 1
    calculus = Calculus.INTUITIONISTIC

    def check(self, node: Derivation, axioms: AxiomIndex) -> str | None:
        c = node.conclusion
        p = node.premises[0].conclusion
        if reason := same_context(node, *node.premises):
            return reason
        if not isinstance(p.succedent, Implies):
            return "premise succedent is not an implication"
        expected = And(p.antecedent, p.succedent.left)
        if c.antecedent != expected:
            return mismatch("antecedent", expected, c.antecedent)
        if c.succedent != p.succedent.right:
            return mismatch("succedent", p.succedent.right, c.succedent)
        return None
