"""Evaluation of terms in a ring and in its localizations."""

from src.localizations.models import LocalizedElem
from src.logic.models import UnboundVariableError
from src.logic.syntax import Add, Const, Mul, Neg, Pow, Sub, Term, Var
from src.rings.presentation import RingElem, RingPresentation


def evaluate_term(ring: RingPresentation, term: Term, env: dict[str, RingElem]) -> RingElem:
    """Value of a term with variables looked up in ``env``."""
    if isinstance(term, Var):
        if term.name not in env:
            raise UnboundVariableError(f"No value for variable {term.name!r}")
        return ring.element(env[term.name])
    if isinstance(term, Const):
        return ring.element(int(term.value)) if term.value.isdigit() else ring.parse_element(term.value)
    if isinstance(term, Neg):
        return -evaluate_term(ring, term.arg, env)
    if isinstance(term, Pow):
        return evaluate_term(ring, term.base, env) ** term.exponent
    left = evaluate_term(ring, term.left, env)
    right = evaluate_term(ring, term.right, env)
    if isinstance(term, Add):
        return left + right
    if isinstance(term, Sub):
        return left - right
    if isinstance(term, Mul):
        return left * right
    raise TypeError(f"Not a term: {term!r}")


def evaluate_local(
    base: RingElem, term: Term, env: dict[str, LocalizedElem]
) -> LocalizedElem:
    """Value of a term in A[base^-1]; ``env`` holds fractions over ``base``."""
    ring = base.ring
    if isinstance(term, Var):
        if term.name not in env:
            raise UnboundVariableError(f"No value for variable {term.name!r}")
        return env[term.name]
    if isinstance(term, Const):
        return LocalizedElem.of(base, evaluate_term(ring, term, {}))
    if isinstance(term, Neg):
        return -evaluate_local(base, term.arg, env)
    if isinstance(term, Pow):
        value = evaluate_local(base, term.base, env)
        result = LocalizedElem.of(base, 1)
        for _ in range(term.exponent):
            result = result * value
        return result
    left = evaluate_local(base, term.left, env)
    right = evaluate_local(base, term.right, env)
    if isinstance(term, Add):
        return left + right
    if isinstance(term, Sub):
        return left - right
    if isinstance(term, Mul):
        return left * right
    raise TypeError(f"Not a term: {term!r}")


def rebase(value: LocalizedElem, factor: RingElem) -> LocalizedElem:
    """Image of a/p^k in A[(p*g)^-1], written over the new base p*g."""
    return LocalizedElem(
        value.base * factor, value.numerator * factor**value.exponent, value.exponent
    )
