"""Truth opens [[phi]] and the forcing judgment f |= phi.

[[phi]] is the largest open forcing phi: f |= phi iff D(f) <= [[phi]]. The
compiler is compositional; quantifiers are handled by registered patterns or,
over Z/n, by expansion into a finite join (exists) or meet (forall) over the
carrier, since every element of a localization of Z/n is the image of a ring
element.
"""

import logging

from config.settings import settings
from src.frame.models import Open
from src.frame.operations import (
    basic_open,
    heyting,
    join,
    join_all,
    leq,
    meet,
    meet_all,
    negation,
    principal_form,
)
from src.ideals.models import Ideal
from src.ideals.quotient import annihilator_saturation, ideal_quotient
from src.logic.printer import format_formula
from src.logic.syntax import (
    And,
    BigAnd,
    BigOr,
    Bottom,
    Eq,
    Exists,
    Forall,
    Formula,
    Implies,
    Or,
    Prop,
    Rel,
    Top,
)
from src.rings.arithmetic import is_nilpotent
from src.rings.models import RingKind, UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from .evaluation import evaluate_term
from .models import ForcingResult, TruthOpen, Verdict
from .patterns import pattern_registry

logger = logging.getLogger(__name__)


class _Unsupported(Exception):
    def __init__(self, phi: Formula, why: str):
        self.reason = f"{why}: {format_formula(phi)}"
        super().__init__(self.reason)


def equality_open(ring: RingPresentation, d: RingElem) -> Open:
    """[[d = 0]] = sqrt((0 : d)), the f with f^N * d = 0."""
    return Open(ideal_quotient(ring, Ideal.zero(ring), Ideal(ring, [d])).deduplicated())


class _Compiler:
    def __init__(self, ring: RingPresentation, props: dict[str, Open]):
        self.ring = ring
        self.props = props
        self.expand = settings.semantics.expand_finite_quantifiers and ring.is_finite

    def compile(self, phi: Formula, env: dict[str, RingElem]) -> Open:
        ring = self.ring
        if isinstance(phi, Top):
            return Open.top(ring)
        if isinstance(phi, Bottom):
            return Open.bottom(ring)
        if isinstance(phi, Eq):
            d = evaluate_term(ring, phi.left, env) - evaluate_term(ring, phi.right, env)
            return equality_open(ring, d)
        if isinstance(phi, Rel):
            if phi.name != "D" or len(phi.args) != 1:
                raise _Unsupported(phi, "unknown relation symbol")
            return basic_open(ring, evaluate_term(ring, phi.args[0], env))
        if isinstance(phi, Prop):
            if phi.name not in self.props:
                raise _Unsupported(phi, "no open assigned to propositional symbol")
            return self.props[phi.name]
        if isinstance(phi, And):
            return principal_form(meet(self.compile(phi.left, env), self.compile(phi.right, env)))
        if isinstance(phi, Or):
            return join(self.compile(phi.left, env), self.compile(phi.right, env))
        if isinstance(phi, BigAnd):
            return principal_form(meet_all(ring, [self.compile(p, env) for p in phi.items]))
        if isinstance(phi, BigOr):
            return join_all(ring, [self.compile(p, env) for p in phi.items])
        if isinstance(phi, Implies):
            if not ring.is_principal:
                # sqrt(0) = 0 in a reduced ring, so negation stays exact
                if isinstance(phi.right, Bottom) and ring.is_known_reduced:
                    return negation(self.compile(phi.left, env), assume_radical=True)
                raise _Unsupported(phi, "implication needs a radical consequent")
            return heyting(self.compile(phi.left, env), self.compile(phi.right, env))
        if isinstance(phi, Exists):
            resolved = pattern_registry.resolve(ring, phi, env)
            if resolved is not None:
                logger.debug(f"Pattern {resolved[0]} compiles {format_formula(phi)}")
                return resolved[1]
            if self.expand:
                return principal_form(
                    join_all(ring, [self._instance(phi, env, a) for a in ring.elements()])
                )
            raise _Unsupported(phi, "no registered pattern for existential")
        if isinstance(phi, Forall):
            if self.expand:
                return principal_form(
                    meet_all(ring, [self._instance(phi, env, a) for a in ring.elements()])
                )
            raise _Unsupported(phi, "universal quantifier over an infinite ring")
        raise TypeError(f"Not a formula: {phi!r}")

    def _instance(self, phi: Exists | Forall, env: dict[str, RingElem], value: RingElem) -> Open:
        return self.compile(phi.body, {**env, phi.var: value})


def truth_open(
    ring: RingPresentation,
    phi: Formula,
    env: dict[str, RingElem] | None = None,
    props: dict[str, Open] | None = None,
) -> TruthOpen:
    """Compile phi to its truth open, or report the first unsupported subformula.

    Args:
        ring: The ring A
        phi: Formula whose free variables are bound by ``env``
        env: Values of the free variables
        props: Opens for propositional symbols (the nabla answer symbol)
    """
    env = {k: ring.element(v) for k, v in (env or {}).items()}
    try:
        value = _Compiler(ring, props or {}).compile(phi, env)
    except _Unsupported as e:
        logger.debug(f"Truth open unknown: {e.reason}")
        return TruthOpen.unknown(e.reason)
    return TruthOpen(value=value)


def forces(
    ring: RingPresentation,
    f: RingElem,
    phi: Formula,
    env: dict[str, RingElem] | None = None,
    props: dict[str, Open] | None = None,
) -> ForcingResult:
    """f |= phi, decided as D(f) <= [[phi]]; false is forced exactly by nilpotents."""
    f = ring.element(f)
    if isinstance(phi, Bottom):
        witness = is_nilpotent(ring, f)
        truth = TruthOpen(value=Open.bottom(ring))
        return ForcingResult(
            verdict=Verdict.of(witness is not None),
            truth=truth,
            nilpotency_exponent=witness.exponent if witness else None,
        )

    truth = truth_open(ring, phi, env, props)
    if not truth.known:
        return ForcingResult(verdict=Verdict.UNKNOWN, truth=truth)
    certificate = leq(basic_open(ring, f), truth.value)
    return ForcingResult(verdict=Verdict.of(certificate is not None), truth=truth, certificate=certificate)


def open_contains(u: Open, x: RingElem) -> bool:
    return leq(basic_open(u.ring, x), u) is not None


def forces_double_negation(
    ring: RingPresentation,
    f: RingElem,
    phi: Formula,
    env: dict[str, RingElem] | None = None,
) -> Verdict:
    """The unrolled clause for f |= not not phi on a finite ring.

    For every g: if every h with fgh |= phi has fgh nilpotent, then fg is
    nilpotent.
    """
    if ring.kind != RingKind.MODULAR_INTEGERS:
        raise UnsupportedRingError("The unrolled clause enumerates a finite ring", ring=ring.spec)
    truth = truth_open(ring, phi, env)
    if not truth.known:
        return Verdict.UNKNOWN
    f = ring.element(f)
    elements = list(ring.elements())
    nilpotent = {a.value for a in elements if is_nilpotent(ring, a) is not None}
    forcing = {a.value for a in elements if open_contains(truth.value, a)}

    for g in elements:
        fg = f * g
        refuted = all(
            (fg * h).value in nilpotent for h in elements if (fg * h).value in forcing
        )
        if refuted and fg.value not in nilpotent:
            return Verdict.FALSE
    return Verdict.TRUE


def almost_field_holds(ring: RingPresentation, x: RingElem) -> bool:
    """not D(x) <= sqrt((0 : x^inf)): whatever kills x up to nilpotents annihilates a power of x."""
    x = ring.element(x)
    lhs = negation(basic_open(ring, x), assume_radical=ring.is_known_reduced)
    saturation = annihilator_saturation(ring, x).saturation
    return leq(lhs, Open(saturation)) is not None
