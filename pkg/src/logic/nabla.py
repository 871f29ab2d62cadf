"""The nabla translation phi |-> phi^nabla with nabla(phi) = (phi => beta) => beta."""

from config.settings import settings
from .models import ReservedSymbolError
from .syntax import (
    ATOMS,
    And,
    BigAnd,
    BigOr,
    Bottom,
    Exists,
    Forall,
    Formula,
    Implies,
    Or,
    Prop,
    Top,
    atoms,
)


def nabla(phi: Formula, beta: Prop | None = None) -> Formula:
    beta = beta or Prop(settings.semantics.beta_symbol)
    return Implies(Implies(phi, beta), beta)


def nabla_translate(phi: Formula, beta_symbol: str | None = None) -> Formula:
    """Translate by structural recursion.

    Atoms and false get wrapped in nabla, disjunctions and existentials are
    translated inside and then wrapped, everything else commutes.

    Raises:
        ReservedSymbolError: If the answer symbol already occurs in phi
    """
    beta = Prop(beta_symbol or settings.semantics.beta_symbol)
    if beta in atoms(phi):
        raise ReservedSymbolError(f"Answer symbol {beta.name!r} already occurs in the formula")
    return _translate(phi, beta)


def _translate(phi: Formula, beta: Prop) -> Formula:
    if isinstance(phi, Top):
        return phi
    if isinstance(phi, (Bottom, *ATOMS)):
        return nabla(phi, beta)
    if isinstance(phi, And):
        return And(_translate(phi.left, beta), _translate(phi.right, beta))
    if isinstance(phi, Implies):
        return Implies(_translate(phi.left, beta), _translate(phi.right, beta))
    if isinstance(phi, BigAnd):
        return BigAnd(tuple(_translate(p, beta) for p in phi.items))
    if isinstance(phi, Or):
        return nabla(Or(_translate(phi.left, beta), _translate(phi.right, beta)), beta)
    if isinstance(phi, BigOr):
        return nabla(BigOr(tuple(_translate(p, beta) for p in phi.items)), beta)
    if isinstance(phi, Forall):
        return Forall(phi.var, _translate(phi.body, beta))
    if isinstance(phi, Exists):
        return nabla(Exists(phi.var, _translate(phi.body, beta)), beta)
    raise TypeError(f"Not a formula: {phi!r}")


def unguarded_positive(phi: Formula, beta: Prop | None = None) -> list[Formula]:
    """Disjunctions and existentials not directly wrapped by nabla.

    Empty for every translated formula.
    """
    beta = beta or Prop(settings.semantics.beta_symbol)
    found: list[Formula] = []

    def walk(psi: Formula, guarded: bool) -> None:
        if isinstance(psi, (Or, BigOr, Exists)) and not guarded:
            found.append(psi)
        if isinstance(psi, Implies):
            inner = psi.left
            wraps = psi.right == beta and isinstance(inner, Implies) and inner.right == beta
            if wraps:
                walk(inner.left, True)
                return
            walk(psi.left, False)
            walk(psi.right, False)
        elif isinstance(psi, (And, Or)):
            walk(psi.left, False)
            walk(psi.right, False)
        elif isinstance(psi, (BigAnd, BigOr)):
            for p in psi.items:
                walk(p, False)
        elif isinstance(psi, (Forall, Exists)):
            walk(psi.body, False)

    walk(phi, False)
    return found
