"""Forward-chaining prover for finite propositional coherent theories.

Axioms are split into definite rules (one conjunction of atoms on the right),
disjunctive rules (several alternatives) and contradictions (false on the
right). Saturation applies definite rules to a set of atoms; a fired
disjunctive rule that no alternative satisfies yet splits the search. A goal
is provable iff every consistent fully saturated branch satisfies one of its
alternatives, which for a finite theory is a complete decision.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from src.logic import builders as b
from src.logic.derivation import Derivation
from src.logic.printer import format_formula, format_sequent
from src.logic.syntax import ATOMS, And, Bottom, Formula, Sequent, free_vars
from src.rings.presentation import RingElem, RingPresentation
from .models import ProofResult, TheoryError
from .theory import atom_of, prime_filter_theory

logger = logging.getLogger(__name__)

Atoms = frozenset[Formula]


@dataclass(frozen=True)
class _Alternative:
    formula: Formula
    atoms: Atoms


@dataclass(frozen=True)
class _Rule:
    sequent: Sequent
    antecedent: Atoms
    alternatives: tuple[_Alternative, ...]


def _atom_set(phi: Formula, where: str) -> Atoms:
    atoms = b.conjuncts(phi)
    for atom in atoms:
        if not isinstance(atom, ATOMS) or free_vars(atom):
            raise TheoryError(f"{where} is not a conjunction of ground atoms: {format_formula(phi)}")
    return frozenset(atoms)


def _alternatives(phi: Formula, where: str) -> tuple[_Alternative, ...]:
    return tuple(_Alternative(leaf, _atom_set(leaf, where)) for leaf in b.disjuncts(phi))


class _Branch:
    """A state formula with derivations of its known atoms, built on demand."""

    def __init__(self, state: Formula, base: dict[Formula, Callable[[], Derivation]]):
        self.state = state
        self.contradiction: _Rule | None = None
        self._base = base
        self._reasons: dict[Formula, _Rule] = {}
        self._built: dict[Formula, Derivation] = {}

    def record(self, atom: Formula, rule: _Rule) -> None:
        self._reasons.setdefault(atom, rule)

    def derive(self, atom: Formula) -> Derivation:
        """state |- atom."""
        if atom not in self._built:
            if atom in self._base:
                self._built[atom] = self._base[atom]()
            else:
                rule = self._reasons[atom]
                fired = self.fire(rule)
                succedent = rule.sequent.succedent
                self._built[atom] = b.cut(fired, b.project(succedent, atom))
        return self._built[atom]

    def fire(self, rule: _Rule) -> Derivation:
        """state |- succedent of the rule."""
        provided = {a: self.derive(a) for a in rule.antecedent}
        premise = b.assemble(self.state, rule.sequent.antecedent, provided)
        return b.cut(premise, b.axiom(rule.sequent))


class CoherentProver:
    """Decision and proof search over one finite propositional coherent theory."""

    def __init__(self, theory: list[Sequent]):
        self.rules: list[_Rule] = []
        for axiom in theory:
            if axiom.context:
                raise TheoryError(f"Axiom has a variable context: {format_sequent(axiom)}")
            if Bottom() in b.conjuncts(axiom.antecedent):
                continue
            rule = _Rule(
                sequent=axiom,
                antecedent=_atom_set(axiom.antecedent, "Axiom antecedent"),
                alternatives=_alternatives(axiom.succedent, "Axiom succedent"),
            )
            self.rules.append(rule)

        self._index: dict[Formula, list[int]] = {}
        self._unconditional: list[int] = []
        for k, rule in enumerate(self.rules):
            if not rule.antecedent:
                self._unconditional.append(k)
            for atom in rule.antecedent:
                self._index.setdefault(atom, []).append(k)
        self._leaves: dict[Atoms, tuple[Atoms, ...]] = {}
        logger.debug(f"Coherent prover over {len(self.rules)} rules")

    # ------------------------------------------------------------------
    # saturation

    def _saturate(self, start: Atoms, branch: _Branch | None = None):
        """(known atoms, pending disjunctive rules) or None when false is derived."""
        known = set(start)
        queue = list(start)
        counts = [0] * len(self.rules)
        pending: list[_Rule] = []

        def fire(k: int) -> bool:
            rule = self.rules[k]
            if not rule.alternatives:
                if branch is not None:
                    branch.contradiction = rule
                return False
            if len(rule.alternatives) > 1:
                pending.append(rule)
                return True
            for atom in rule.alternatives[0].atoms:
                if atom not in known:
                    known.add(atom)
                    queue.append(atom)
                    if branch is not None:
                        branch.record(atom, rule)
            return True

        for k in self._unconditional:
            if not fire(k):
                return None
        while queue:
            atom = queue.pop()
            for k in self._index.get(atom, ()):
                counts[k] += 1
                if counts[k] == len(self.rules[k].antecedent) and not fire(k):
                    return None
        return frozenset(known), pending

    @staticmethod
    def _open_split(known: Atoms, pending: list[_Rule]) -> _Rule | None:
        for rule in pending:
            if not any(alt.atoms <= known for alt in rule.alternatives):
                return rule
        return None

    def leaves(self, start: Atoms) -> tuple[Atoms, ...]:
        """Consistent saturated branches reachable from ``start``."""
        start = frozenset(start)
        if start in self._leaves:
            return self._leaves[start]
        result: tuple[Atoms, ...] = ()
        saturated = self._saturate(start)
        if saturated is not None:
            known, pending = saturated
            split = self._open_split(known, pending)
            if split is None:
                result = (known,)
            else:
                found: list[Atoms] = []
                for alt in split.alternatives:
                    found.extend(self.leaves(known | alt.atoms))
                result = tuple(dict.fromkeys(found))
        self._leaves[start] = result
        return result

    # ------------------------------------------------------------------
    # queries

    def entails(self, antecedent: Atoms, alternatives: list[Atoms]) -> bool:
        """Every consistent branch from ``antecedent`` satisfies some alternative."""
        return all(any(alt <= leaf for alt in alternatives) for leaf in self.leaves(antecedent))

    def decide(self, goal: Sequent) -> ProofResult:
        antecedent, alternatives = self._goal(goal)
        if antecedent is None:
            return ProofResult(provable=True)
        leaves = self.leaves(antecedent)
        for leaf in leaves:
            if not any(alt.atoms <= leaf for alt in alternatives):
                return ProofResult(
                    provable=False, leaves=len(leaves), failing_branch=sorted(leaf, key=format_formula)
                )
        return ProofResult(provable=True, leaves=len(leaves))

    def prove(self, goal: Sequent) -> ProofResult:
        """Decide the goal and, when provable, build a derivation of it."""
        decision = self.decide(goal)
        if not decision.provable:
            return decision
        antecedent, alternatives = self._goal(goal)
        if antecedent is None:
            derivation = b.cut(
                b.project(goal.antecedent, Bottom()), b.from_bottom(goal.succedent)
            )
        else:
            root = _Branch(goal.antecedent, {a: _projector(goal.antecedent, a) for a in antecedent})
            derivation = self._build(root, antecedent, alternatives, goal.succedent)
        logger.info(f"Proved {format_sequent(goal)} in {derivation.size()} steps")
        return ProofResult(provable=True, derivation=derivation, leaves=decision.leaves)

    def _goal(self, goal: Sequent) -> tuple[Atoms | None, list[_Alternative]]:
        if goal.context:
            raise TheoryError(f"Goal has a variable context: {format_sequent(goal)}")
        if Bottom() in b.conjuncts(goal.antecedent):
            return None, []
        return _atom_set(goal.antecedent, "Goal antecedent"), list(
            _alternatives(goal.succedent, "Goal succedent")
        )

    def _build(
        self,
        branch: _Branch,
        start: Atoms,
        alternatives: list[_Alternative],
        goal: Formula,
    ) -> Derivation:
        branch.contradiction = None
        saturated = self._saturate(start, branch)
        if saturated is None:
            closing = branch.fire(branch.contradiction)
            return b.cut(closing, b.from_bottom(goal))

        known, pending = saturated
        for alt in alternatives:
            if alt.atoms <= known:
                provided = {a: branch.derive(a) for a in alt.atoms}
                reached = b.assemble(branch.state, alt.formula, provided)
                return b.cut(reached, b.inject(alt.formula, goal))

        split = self._open_split(known, pending)
        if split is None:
            raise TheoryError(f"Branch misses the goal {format_formula(goal)}")
        disjunction = split.sequent.succedent
        logger.debug(f"Splitting on {format_sequent(split.sequent)}")

        spread = b.case_split(
            disjunction,
            branch.state,
            goal,
            lambda h: self._case(branch, h, known, alternatives, goal),
        )
        pair = b.and_intro(branch.fire(split), b.identity(branch.state))
        return b.cut(pair, spread)

    def _case(
        self,
        parent: _Branch,
        h: Formula,
        known: Atoms,
        alternatives: list[_Alternative],
        goal: Formula,
    ) -> Derivation:
        """h & parent.state |- goal."""
        state = And(h, parent.state)
        base = {a: _projector(state, a) for a in b.conjuncts(h)}
        for a in known:
            if a not in base:
                base[a] = _weakened(state, parent, a)
        return self._build(_Branch(state, base), known | frozenset(b.conjuncts(h)), alternatives, goal)


def _projector(state: Formula, atom: Formula):
    return lambda: b.project(state, atom)


def _weakened(state: Formula, parent: _Branch, atom: Formula):
    return lambda: b.cut(b.node("and-elim-right", state, parent.state), parent.derive(atom))


def coherent_prove(theory: list[Sequent], goal: Sequent) -> Derivation | None:
    """A checkable derivation of ``goal`` from ``theory``, or None if it is not provable."""
    return CoherentProver(theory).prove(goal).derivation


@lru_cache(maxsize=64)
def prime_filter_prover(ring: RingPresentation) -> CoherentProver:
    """The prover for the full prime-filter theory of a finite ring."""
    return CoherentProver(prime_filter_theory(ring))


def coherent_entails(ring: RingPresentation, f: RingElem, gs: list[RingElem]) -> bool:
    """D(f) |- D(g_1) | ... | D(g_m) in the prime-filter theory of a finite ring."""
    prover = prime_filter_prover(ring)
    antecedent = frozenset({atom_of(ring.element(f))})
    return prover.entails(antecedent, [frozenset({atom_of(ring.element(g))}) for g in gs])
