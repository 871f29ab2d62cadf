"""The propositional theory of prime filters instantiated over a finite symbol set."""

import logging

from src.logic.syntax import And, Bottom, Formula, Or, Rel, Sequent, Top, D, const_int
from src.rings.models import RingKind, UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from src.semantics.evaluation import evaluate_term

logger = logging.getLogger(__name__)


def atom_of(x: RingElem) -> Rel:
    """The atom D(x) with x printed as an integer literal."""
    if x.ring.kind not in (RingKind.INTEGERS, RingKind.MODULAR_INTEGERS):
        raise UnsupportedRingError("Atoms are written for Z and Z/n only", ring=x.ring.spec)
    return D(const_int(int(x.value)))


def prime_filter_theory(
    ring: RingPresentation, symbols: list[RingElem] | None = None
) -> list[Sequent]:
    """Instances of the five prime-filter axiom schemes over ``symbols``.

    D(0) |- false, true |- D(1), D(x+y) |- D(x) | D(y), D(xy) |- D(x) and
    D(x) & D(y) |- D(xy), for all ordered pairs x, y whose sums and products
    stay inside the symbol set. ``symbols`` defaults to every element of a
    finite ring.
    """
    if symbols is None:
        if not ring.is_finite:
            raise UnsupportedRingError("An infinite ring needs an explicit symbol set", ring=ring.spec)
        symbols = list(ring.elements())
    elems = list(dict.fromkeys(ring.element(s) for s in symbols))
    present = set(elems)

    axioms: list[Sequent] = []
    zero, one = ring.zero, ring.one
    if zero in present:
        axioms.append(Sequent((), atom_of(zero), Bottom()))
    if one in present:
        axioms.append(Sequent((), Top(), atom_of(one)))
    for x in elems:
        for y in elems:
            total, product = x + y, x * y
            if total in present:
                axioms.append(Sequent((), atom_of(total), Or(atom_of(x), atom_of(y))))
            if product in present:
                axioms.append(Sequent((), atom_of(product), atom_of(x)))
                axioms.append(Sequent((), And(atom_of(x), atom_of(y)), atom_of(product)))
    axioms = list(dict.fromkeys(axioms))
    logger.debug(f"Prime-filter theory of {ring.spec}: {len(axioms)} axioms over {len(elems)} symbols")
    return axioms


def normalize_atoms(ring: RingPresentation, phi: Formula) -> Formula:
    """Rewrite each ground D(t) as D(value of t), so D(8) over Z/6 reads D(2)."""
    if isinstance(phi, Rel) and phi.name == "D" and len(phi.args) == 1:
        return atom_of(evaluate_term(ring, phi.args[0], {}))
    if isinstance(phi, (And, Or)):
        return type(phi)(normalize_atoms(ring, phi.left), normalize_atoms(ring, phi.right))
    return phi


def normalize_sequent(ring: RingPresentation, sequent: Sequent) -> Sequent:
    return Sequent(
        sequent.context,
        normalize_atoms(ring, sequent.antecedent),
        normalize_atoms(ring, sequent.succedent),
    )
