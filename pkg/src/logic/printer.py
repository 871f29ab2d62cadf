"""Canonical printing. ``parse(format(x)) == x`` for every node the parser builds."""

from config.settings import settings
from .syntax import (
    Add,
    And,
    BigAnd,
    BigOr,
    Bottom,
    Const,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Mul,
    Neg,
    Or,
    Pow,
    Prop,
    Rel,
    Sequent,
    Sub,
    Term,
    Top,
    Var,
    is_negation,
)

# binding strength; higher binds tighter
_QUANTIFIER, _IMPLIES, _OR, _AND, _NOT, _ATOM = 0, 1, 2, 3, 4, 9
_SUM, _PRODUCT, _NEG, _POWER, _PRIMARY = 1, 2, 3, 4, 9


def _term(t: Term) -> tuple[str, int]:
    if isinstance(t, Var):
        return t.name, _PRIMARY
    if isinstance(t, Const):
        return t.value, _PRIMARY
    if isinstance(t, Add):
        return f"{format_term(t.left, _SUM)} + {format_term(t.right, _PRODUCT)}", _SUM
    if isinstance(t, Sub):
        return f"{format_term(t.left, _SUM)} - {format_term(t.right, _PRODUCT)}", _SUM
    if isinstance(t, Mul):
        return f"{format_term(t.left, _PRODUCT)}*{format_term(t.right, _NEG)}", _PRODUCT
    if isinstance(t, Neg):
        return f"-{format_term(t.arg, _NEG)}", _NEG
    return f"{format_term(t.base, _PRIMARY)}^{t.exponent}", _POWER


def format_term(t: Term, context: int = 0) -> str:
    text, strength = _term(t)
    return f"({text})" if strength < context else text


def _formula(phi: Formula, abbreviate: bool) -> tuple[str, int]:
    fmt = lambda psi, ctx: format_formula(psi, abbreviate, ctx)  # noqa: E731
    if isinstance(phi, Top):
        return "true", _ATOM
    if isinstance(phi, Bottom):
        return "false", _ATOM
    if isinstance(phi, Prop):
        return phi.name, _ATOM
    if isinstance(phi, Eq):
        return f"{format_term(phi.left)} = {format_term(phi.right)}", _NOT + 1
    if isinstance(phi, Rel):
        return f"{phi.name}(" + ", ".join(format_term(t) for t in phi.args) + ")", _ATOM
    if isinstance(phi, (BigAnd, BigOr)):
        head = "And" if isinstance(phi, BigAnd) else "Or"
        return head + "{" + ", ".join(fmt(p, _QUANTIFIER) for p in phi.items) + "}", _ATOM
    if isinstance(phi, (Forall, Exists)):
        word = "forall" if isinstance(phi, Forall) else "exists"
        return f"{word} {phi.var}:A. {fmt(phi.body, _QUANTIFIER)}", _QUANTIFIER
    if isinstance(phi, And):
        return f"{fmt(phi.left, _AND)} & {fmt(phi.right, _NOT)}", _AND
    if isinstance(phi, Or):
        return f"{fmt(phi.left, _OR)} | {fmt(phi.right, _AND)}", _OR
    if abbreviate and _is_nabla(phi):
        return f"nabla({fmt(phi.left.left, _QUANTIFIER)})", _ATOM
    if is_negation(phi):
        return f"not {fmt(phi.left, _NOT)}", _NOT
    return f"{fmt(phi.left, _OR)} => {fmt(phi.right, _IMPLIES)}", _IMPLIES


def _is_nabla(phi: Formula) -> bool:
    beta = Prop(settings.semantics.beta_symbol)
    return (
        isinstance(phi, Implies)
        and phi.right == beta
        and isinstance(phi.left, Implies)
        and phi.left.right == beta
    )


def format_formula(phi: Formula, abbreviate: bool = False, context: int = 0) -> str:
    """Canonical text; ``abbreviate`` prints (phi => beta) => beta as nabla(phi)."""
    text, strength = _formula(phi, abbreviate)
    # a quantifier extends to the right, so it is bracketed as any operand
    if strength < context or (strength == _QUANTIFIER and context > _QUANTIFIER):
        return f"({text})"
    return text


def format_sequent(sequent: Sequent, abbreviate: bool = False) -> str:
    body = f"{format_formula(sequent.antecedent, abbreviate)} |- {format_formula(sequent.succedent, abbreviate)}"
    if not sequent.context:
        return body
    return "[" + ", ".join(f"{x}:A" for x in sequent.context) + "] " + body
