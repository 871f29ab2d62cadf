"""Literal forcing clauses over Z/n, used as ground truth for the truth-open compiler.

Every clause is evaluated by search over the finite carrier. Values of bound
variables range over A itself, since every element of a localization of Z/n
is the image of an element of Z/n.
"""

import logging
from math import gcd

from src.frame.models import Open
from src.frame.operations import basic_open, leq, principal_form
from src.ideals.models import Ideal
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
from src.rings.arithmetic import nilpotency_bound
from src.rings.models import RingKind, UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from src.semantics.evaluation import evaluate_term

logger = logging.getLogger(__name__)


class BruteForcer:
    """Sets of residues f with f |= phi, memoized per formula and environment."""

    def __init__(self, ring: RingPresentation, props: dict[str, Open] | None = None):
        if ring.kind != RingKind.MODULAR_INTEGERS:
            raise UnsupportedRingError("Brute-force forcing needs Z/n", ring=ring.spec)
        self.ring = ring
        self.n = ring.modulus
        self.bound = nilpotency_bound(ring)
        self.props = props or {}
        self._memo: dict[tuple[Formula, tuple], frozenset[int]] = {}

    def _kills(self, f: int, d: int) -> bool:
        """f^N * d = 0 for some N."""
        return any(pow(f, k, self.n) * d % self.n == 0 for k in range(self.bound + 1))

    def _nilpotent(self, f: int) -> bool:
        return self._kills(f, 1)

    def _divides_power(self, f: int, t: int) -> bool:
        """f^N in (t) for some N."""
        d = gcd(t, self.n)
        return any(pow(f, k, self.n) % d == 0 for k in range(self.bound + 1))

    def _covered(self, f: int, branch: frozenset[int]) -> bool:
        """A partition f^k = f*g_1 + ... + f*g_m with every f*g_i in branch.

        Sums of such summands form the additive subgroup generated by them,
        which in Z/n is the ideal of their gcd with n.
        """
        summands = [f * g % self.n for g in range(self.n) if f * g % self.n in branch]
        d = gcd(self.n, *summands)
        return any(pow(f, k, self.n) % d == 0 for k in range(1, self.bound + 2))

    def forcing_set(self, phi: Formula, env: dict[str, int]) -> frozenset[int]:
        key = (phi, tuple(sorted(env.items())))
        if key not in self._memo:
            self._memo[key] = frozenset(self._compute(phi, env))
        return self._memo[key]

    def _value(self, term, env: dict[str, int]) -> int:
        ring = self.ring
        return int(evaluate_term(ring, term, {k: ring.element(v) for k, v in env.items()}).value)

    def _compute(self, phi: Formula, env: dict[str, int]):
        n = self.n
        everything = range(n)
        if isinstance(phi, Top):
            return everything
        if isinstance(phi, Bottom):
            return [f for f in everything if self._nilpotent(f)]
        if isinstance(phi, Eq):
            d = (self._value(phi.left, env) - self._value(phi.right, env)) % n
            return [f for f in everything if self._kills(f, d)]
        if isinstance(phi, Rel):
            if phi.name != "D" or len(phi.args) != 1:
                raise ValueError(f"Unknown relation symbol {phi.name}")
            t = self._value(phi.args[0], env)
            return [f for f in everything if self._divides_power(f, t)]
        if isinstance(phi, Prop):
            u = self.props[phi.name]
            return [f for f in everything if leq(basic_open(self.ring, f), u) is not None]
        if isinstance(phi, (And, BigAnd)):
            items = [phi.left, phi.right] if isinstance(phi, And) else list(phi.items)
            result = set(everything)
            for item in items:
                result &= self.forcing_set(item, env)
            return result
        if isinstance(phi, (Or, BigOr, Exists)):
            if isinstance(phi, Exists):
                branches = [self.forcing_set(phi.body, {**env, phi.var: b}) for b in everything]
            else:
                items = [phi.left, phi.right] if isinstance(phi, Or) else list(phi.items)
                branches = [self.forcing_set(item, env) for item in items]
            branch = frozenset().union(*branches)
            return [f for f in everything if self._covered(f, branch)]
        if isinstance(phi, Implies):
            premise = self.forcing_set(phi.left, env)
            conclusion = self.forcing_set(phi.right, env)
            return [
                f
                for f in everything
                if all(f * g % n in conclusion for g in everything if f * g % n in premise)
            ]
        if isinstance(phi, Forall):
            instances = [self.forcing_set(phi.body, {**env, phi.var: b}) for b in everything]
            return [
                f
                for f in everything
                if all(f * g % n in inst for g in everything for inst in instances)
            ]
        raise TypeError(f"Not a formula: {phi!r}")


def brute_truth_open(
    ring: RingPresentation,
    phi: Formula,
    env: dict[str, RingElem] | None = None,
    props: dict[str, Open] | None = None,
) -> Open:
    """The join of all basic opens D(f) with f |= phi, by literal search.

    Raises:
        UnsupportedRingError: Ring is not Z/n
    """
    forcer = BruteForcer(ring, props)
    values = {k: int(ring.element(v).value) for k, v in (env or {}).items()}
    forcing = sorted(forcer.forcing_set(phi, values))
    logger.debug(f"{len(forcing)} of {ring.modulus} residues force the formula")
    return principal_form(Open(Ideal(ring, [ring.element(f) for f in forcing])))
