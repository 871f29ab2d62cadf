"""Combinators that assemble derivations from rule applications.

All helpers work in one fixed context (empty by default), which is what the
propositional theories of the oracles need.
"""

from typing import Callable

from .derivation import Derivation
from .syntax import And, BigOr, Bottom, Formula, Or, Sequent, Top


def node(
    rule: str,
    antecedent: Formula,
    succedent: Formula,
    premises: tuple[Derivation, ...] = (),
    context: tuple[str, ...] = (),
    **data,
) -> Derivation:
    return Derivation(rule, Sequent(context, antecedent, succedent), premises, dict(data))


def _ant(d: Derivation) -> Formula:
    return d.conclusion.antecedent


def _suc(d: Derivation) -> Formula:
    return d.conclusion.succedent


def axiom(sequent: Sequent) -> Derivation:
    return Derivation("axiom", sequent)


def identity(phi: Formula, context: tuple[str, ...] = ()) -> Derivation:
    return node("identity", phi, phi, context=context)


def cut(first: Derivation, second: Derivation) -> Derivation:
    """first: phi |- psi, second: psi |- chi, result phi |- chi."""
    if _suc(first) == _ant(second) and _ant(first) == _suc(first):
        return second
    if _ant(second) == _suc(second):
        return first
    return node(
        "cut", _ant(first), _suc(second), (first, second), first.conclusion.context
    )


def and_intro(left: Derivation, right: Derivation) -> Derivation:
    return node(
        "and-intro",
        _ant(left),
        And(_suc(left), _suc(right)),
        (left, right),
        left.conclusion.context,
    )


def or_elim(left: Derivation, right: Derivation) -> Derivation:
    return node(
        "or-elim", Or(_ant(left), _ant(right)), _suc(left), (left, right), left.conclusion.context
    )


def conjuncts(phi: Formula) -> list[Formula]:
    if isinstance(phi, And):
        return conjuncts(phi.left) + conjuncts(phi.right)
    if isinstance(phi, Top):
        return []
    return [phi]


def disjuncts(phi: Formula) -> list[Formula]:
    if isinstance(phi, Or):
        return disjuncts(phi.left) + disjuncts(phi.right)
    if isinstance(phi, BigOr):
        return [d for item in phi.items for d in disjuncts(item)]
    if isinstance(phi, Bottom):
        return []
    return [phi]


def project(phi: Formula, target: Formula) -> Derivation:
    """phi |- target where target is a leaf of phi's binary conjunction tree."""
    if phi == target:
        return identity(phi)
    if isinstance(phi, And):
        if target in conjuncts(phi.left):
            return cut(node("and-elim-left", phi, phi.left), project(phi.left, target))
        if target in conjuncts(phi.right):
            return cut(node("and-elim-right", phi, phi.right), project(phi.right, target))
    raise ValueError("Target is not a conjunct of the formula")


def assemble(
    phi: Formula, target: Formula, provided: dict[Formula, Derivation] | None = None
) -> Derivation:
    """phi |- target for a conjunction tree of leaves of phi (or of ``provided``)."""
    provided = provided or {}
    if phi == target:
        return identity(phi)
    if isinstance(target, Top):
        return node("top-intro", phi, target)
    if isinstance(target, And):
        return and_intro(assemble(phi, target.left, provided), assemble(phi, target.right, provided))
    if target in provided:
        return provided[target]
    return project(phi, target)


def inject(leaf: Formula, goal: Formula) -> Derivation:
    """leaf |- goal where leaf is a disjunct of goal's disjunction tree."""
    if leaf == goal:
        return identity(leaf)
    if isinstance(goal, Or):
        if leaf in disjuncts(goal.left):
            return cut(inject(leaf, goal.left), node("or-intro-left", goal.left, goal))
        if leaf in disjuncts(goal.right):
            return cut(inject(leaf, goal.right), node("or-intro-right", goal.right, goal))
    if isinstance(goal, BigOr):
        for k, item in enumerate(goal.items):
            if leaf in disjuncts(item):
                return cut(inject(leaf, item), node("indexed-or-intro", item, goal, index=k))
    raise ValueError("Leaf is not a disjunct of the goal")


def from_bottom(goal: Formula) -> Derivation:
    return identity(goal) if isinstance(goal, Bottom) else node("bottom-elim", Bottom(), goal)


def map_disjunction(
    source: Formula, goal: Formula, leaf: Callable[[Formula], Derivation]
) -> Derivation:
    """source |- goal by case analysis over source's disjunction tree.

    ``leaf(phi)`` must return phi |- goal for every leaf phi.
    """
    if isinstance(source, Or):
        return or_elim(
            map_disjunction(source.left, goal, leaf), map_disjunction(source.right, goal, leaf)
        )
    if isinstance(source, BigOr):
        branches = tuple(map_disjunction(item, goal, leaf) for item in source.items)
        return node("indexed-or-elim", source, goal, branches)
    if isinstance(source, Bottom):
        return from_bottom(goal)
    return leaf(source)


def case_split(
    disjunction: Formula, rest: Formula, goal: Formula, branch: Callable[[Formula], Derivation]
) -> Derivation:
    """disjunction & rest |- goal, distributing rest over each disjunct.

    ``branch(h)`` must return h & rest |- goal for every leaf h.
    """
    state = And(disjunction, rest)
    if isinstance(disjunction, Or):
        spread = Or(And(disjunction.left, rest), And(disjunction.right, rest))
        cases = or_elim(
            case_split(disjunction.left, rest, goal, branch),
            case_split(disjunction.right, rest, goal, branch),
        )
        return cut(node("distributivity", state, spread), cases)
    if isinstance(disjunction, BigOr):
        spread = BigOr(tuple(And(item, rest) for item in disjunction.items))
        cases = node(
            "indexed-or-elim",
            spread,
            goal,
            tuple(case_split(item, rest, goal, branch) for item in disjunction.items),
        )
        return cut(node("indexed-distributivity", state, spread), cases)
    if isinstance(disjunction, Bottom):
        return cut(node("and-elim-left", state, Bottom()), from_bottom(goal))
    return branch(disjunction)

