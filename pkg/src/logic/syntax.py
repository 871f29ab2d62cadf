"""Terms, formulas and sequents.

All nodes are frozen dataclasses, hashable and compared structurally. Negation
is not a node: ``neg(phi)`` builds ``phi => false``.
"""

from dataclasses import dataclass
from functools import reduce
from typing import Union

from .models import CaptureError


# ----------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    """Integer literal (digits only) or ring indeterminate name."""

    value: str


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Sub:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Pow:
    base: "Term"
    exponent: int


Term = Union[Var, Const, Add, Sub, Mul, Neg, Pow]


# ----------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Rel:
    """Relation symbol applied to terms; D(t) is Rel("D", (t,))."""

    name: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Prop:
    """Propositional parameter, e.g. the answer symbol of the nabla translation."""

    name: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class BigAnd:
    items: tuple["Formula", ...]


@dataclass(frozen=True)
class BigOr:
    items: tuple["Formula", ...]


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


Formula = Union[Eq, Rel, Prop, Top, Bottom, And, Or, BigAnd, BigOr, Implies, Forall, Exists]

ATOMS = (Eq, Rel, Prop)
QUANTIFIERS = (Forall, Exists)


@dataclass(frozen=True)
class Sequent:
    """antecedent |- succedent in an ordered variable context."""

    context: tuple[str, ...]
    antecedent: Formula
    succedent: Formula


# ----------------------------------------------------------------------
# constructors


def neg(phi: Formula) -> Formula:
    return Implies(phi, Bottom())


def D(term: Term | str | int) -> Rel:
    if isinstance(term, int):
        term = const_int(term)
    elif isinstance(term, str):
        term = Const(term)
    return Rel("D", (term,))


def const_int(value: int) -> Term:
    if value < 0:
        return Neg(Const(str(-value)))
    return Const(str(value))


def conj(items: list[Formula]) -> Formula:
    """Right-nested binary conjunction; the empty conjunction is true."""
    if not items:
        return Top()
    return reduce(lambda acc, phi: And(phi, acc), reversed(items[:-1]), items[-1])


def disj(items: list[Formula]) -> Formula:
    """Right-nested binary disjunction; the empty disjunction is false."""
    if not items:
        return Bottom()
    return reduce(lambda acc, phi: Or(phi, acc), reversed(items[:-1]), items[-1])


def is_negation(phi: Formula) -> bool:
    return isinstance(phi, Implies) and isinstance(phi.right, Bottom)


# ----------------------------------------------------------------------
# variables and substitution


def term_vars(t: Term) -> frozenset[str]:
    if isinstance(t, Var):
        return frozenset({t.name})
    if isinstance(t, Const):
        return frozenset()
    if isinstance(t, Neg):
        return term_vars(t.arg)
    if isinstance(t, Pow):
        return term_vars(t.base)
    return term_vars(t.left) | term_vars(t.right)


def free_vars(phi: Formula) -> frozenset[str]:
    if isinstance(phi, Eq):
        return term_vars(phi.left) | term_vars(phi.right)
    if isinstance(phi, Rel):
        return frozenset().union(*(term_vars(t) for t in phi.args))
    if isinstance(phi, (Prop, Top, Bottom)):
        return frozenset()
    if isinstance(phi, (And, Or, Implies)):
        return free_vars(phi.left) | free_vars(phi.right)
    if isinstance(phi, (BigAnd, BigOr)):
        return frozenset().union(*(free_vars(p) for p in phi.items))
    return free_vars(phi.body) - {phi.var}


def bound_vars(phi: Formula) -> frozenset[str]:
    if isinstance(phi, (And, Or, Implies)):
        return bound_vars(phi.left) | bound_vars(phi.right)
    if isinstance(phi, (BigAnd, BigOr)):
        return frozenset().union(*(bound_vars(p) for p in phi.items))
    if isinstance(phi, QUANTIFIERS):
        return bound_vars(phi.body) | {phi.var}
    return frozenset()


def substitute_term(t: Term, mapping: dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Const):
        return t
    if isinstance(t, Neg):
        return Neg(substitute_term(t.arg, mapping))
    if isinstance(t, Pow):
        return Pow(substitute_term(t.base, mapping), t.exponent)
    return type(t)(substitute_term(t.left, mapping), substitute_term(t.right, mapping))


def substitute(phi: Formula, mapping: dict[str, Term]) -> Formula:
    """Simultaneous substitution of terms for free variables.

    Raises:
        CaptureError: If a variable of a substituted term would become bound
    """
    if not mapping:
        return phi
    if isinstance(phi, Eq):
        return Eq(substitute_term(phi.left, mapping), substitute_term(phi.right, mapping))
    if isinstance(phi, Rel):
        return Rel(phi.name, tuple(substitute_term(t, mapping) for t in phi.args))
    if isinstance(phi, (Prop, Top, Bottom)):
        return phi
    if isinstance(phi, (And, Or, Implies)):
        return type(phi)(substitute(phi.left, mapping), substitute(phi.right, mapping))
    if isinstance(phi, (BigAnd, BigOr)):
        return type(phi)(tuple(substitute(p, mapping) for p in phi.items))

    inner = {k: v for k, v in mapping.items() if k != phi.var}
    live = {k: v for k, v in inner.items() if k in free_vars(phi.body)}
    if any(phi.var in term_vars(v) for v in live.values()):
        raise CaptureError(f"Variable {phi.var} would capture a substituted term")
    return type(phi)(phi.var, substitute(phi.body, inner))


def atoms(phi: Formula) -> list[Formula]:
    """Atoms of a formula in left-to-right order (with repetitions)."""
    if isinstance(phi, ATOMS):
        return [phi]
    if isinstance(phi, (Top, Bottom)):
        return []
    if isinstance(phi, (And, Or, Implies)):
        return atoms(phi.left) + atoms(phi.right)
    if isinstance(phi, (BigAnd, BigOr)):
        return [a for p in phi.items for a in atoms(p)]
    return atoms(phi.body)
