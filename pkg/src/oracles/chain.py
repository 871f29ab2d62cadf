"""Turning an algebraic entailment certificate into a derivation.

A certificate f^n = u_1 g_{i_1} + ... + u_m g_{i_m} unfolds into

    D(f) |- D(f^n) |- D(s_1) | ... | D(s_m) |- D(g_{i_1}) | ... |- D(g_1) | ... | D(g_r)

with s_k = u_k g_{i_k}, each step an instance of a prime-filter axiom.
"""

import logging

from src.frame.models import LeqCertificate
from src.frame.operations import verify_leq
from src.ideals.models import CertificateError, MembershipCertificate
from src.logic import builders as b
from src.logic.derivation import Derivation
from src.logic.syntax import And, Bottom, Formula, Or, Sequent, disj
from src.rings.presentation import RingElem
from .models import EntailmentChain
from .theory import atom_of, prime_filter_theory

logger = logging.getLogger(__name__)


def _power_chain(f: RingElem, n: int, symbols: list[RingElem]) -> Derivation:
    """D(f) |- D(f^n) by repeated D(f^j) & D(f) |- D(f^(j+1))."""
    base = atom_of(f)
    current = b.identity(base)
    power = f
    symbols.append(f)
    for _ in range(n - 1):
        nxt = power * f
        step = Sequent((), And(atom_of(power), base), atom_of(nxt))
        current = b.cut(b.and_intro(current, b.identity(base)), b.axiom(step))
        power = nxt
        symbols.append(power)
    return current


def _split_chain(summands: list[RingElem], symbols: list[RingElem]) -> Derivation:
    """D(s_1 + ... + s_m) |- D(s_1) | ... | D(s_m) through D(x+y) |- D(x) | D(y)."""
    if len(summands) == 1:
        symbols.append(summands[0])
        return b.identity(atom_of(summands[0]))

    head, tail_terms = summands[0], summands[1:]
    rest = sum(tail_terms, head.ring.zero)
    symbols.extend([head, rest, head + rest])
    tail = disj([atom_of(s) for s in tail_terms])
    target = Or(atom_of(head), tail)

    split = b.axiom(Sequent((), atom_of(head + rest), Or(atom_of(head), atom_of(rest))))
    left = b.node("or-intro-left", atom_of(head), target)
    right = b.cut(_split_chain(tail_terms, symbols), b.node("or-intro-right", tail, target))
    return b.cut(split, b.or_elim(left, right))


def _single_chain(
    f: RingElem,
    certificate: MembershipCertificate,
    generators: tuple[RingElem, ...],
    goal: Formula,
    symbols: list[RingElem],
) -> Derivation:
    """D(f) |- goal for one generator of the smaller open."""
    ring = f.ring
    n = certificate.exponent
    raised = _power_chain(f, n, symbols)
    terms = [(t.cofactor, generators[t.index]) for t in certificate.cofactors]
    summands = [u * g for u, g in terms]

    if not summands:
        # f^n = 0
        symbols.append(ring.zero)
        return b.cut(
            b.cut(raised, b.axiom(Sequent((), atom_of(ring.zero), Bottom()))), b.from_bottom(goal)
        )

    spread = _split_chain(summands, symbols)
    source = disj([atom_of(s) for s in summands])
    reached = disj([atom_of(g) for _, g in terms])
    by_summand = {atom_of(u * g): (u, g) for u, g in reversed(terms)}

    def weaken(leaf: Formula) -> Derivation:
        u, g = by_summand[leaf]
        symbols.extend([u, g])
        step = b.axiom(Sequent((), leaf, atom_of(g)))
        return b.cut(step, b.inject(atom_of(g), reached))

    narrowed = b.map_disjunction(source, reached, weaken)
    widened = b.map_disjunction(reached, goal, lambda leaf: b.inject(leaf, goal))
    return b.cut(raised, b.cut(spread, b.cut(narrowed, widened)))


def entailment_derivation(certificate: LeqCertificate) -> EntailmentChain:
    """Rewrite D(f_1, ...) <= D(g_1, ...) as a derivation of
    D(f_1) | ... |- D(g_1) | ... from prime-filter axiom instances.

    Raises:
        CertificateError: The certificate does not re-verify
        UnsupportedRingError: Ring is not Z or Z/n
    """
    if not verify_leq(certificate):
        raise CertificateError("Leq certificate does not verify", ring=certificate.lower.ring.spec)
    ring = certificate.lower.ring
    generators = certificate.upper.generators
    antecedent = disj([atom_of(f) for f in certificate.lower.generators])
    goal = disj([atom_of(g) for g in generators])

    symbols: list[RingElem] = []
    chains: dict[Formula, Derivation] = {}
    for f, membership in zip(certificate.lower.generators, certificate.certificates):
        chains.setdefault(atom_of(f), _single_chain(f, membership, generators, goal, symbols))

    derivation = b.map_disjunction(antecedent, goal, lambda leaf: chains[leaf])
    theory = prime_filter_theory(ring, symbols)
    logger.debug(
        f"Entailment chain with {derivation.size()} steps over {len(theory)} axiom instances"
    )
    return EntailmentChain(
        sequent=Sequent((), antecedent, goal), theory=theory, derivation=derivation
    )
