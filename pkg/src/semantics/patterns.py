"""Existential formulas whose truth open has a closed form.

Each pattern recognises a shape of ``exists y. ...`` and returns the largest
open forcing it. Patterns are tried in registration order.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, ClassVar

from src.frame.models import Open
from src.frame.operations import basic_open
from src.ideals.models import Ideal
from src.ideals.quotient import ideal_quotient
from src.logic.syntax import Const, Eq, Exists, Formula, Mul, Term, Var, term_vars
from src.rings.presentation import RingElem, RingPresentation
from .evaluation import evaluate_term

logger = logging.getLogger(__name__)


def _linear_equation(phi: Exists) -> tuple[Term, Term] | None:
    """(t, c) when the body reads t*y = c (factors and sides in either order)."""
    y = phi.var
    body = phi.body
    if not isinstance(body, Eq):
        return None
    for product, target in ((body.left, body.right), (body.right, body.left)):
        if not isinstance(product, Mul) or y in term_vars(target):
            continue
        for coefficient, variable in ((product.left, product.right), (product.right, product.left)):
            if variable == Var(y) and y not in term_vars(coefficient):
                return coefficient, target
    return None


class ExistentialPattern(ABC):
    """A closed form for one shape of existential formula.

    Attributes:
        name: Pattern identifier
        description: The shape and its truth open
    """

    name: ClassVar[str]
    description: ClassVar[str]

    @abstractmethod
    def match(self, phi: Exists) -> dict[str, Term] | None:
        """Bindings of the pattern's terms, or None if phi has another shape."""
        pass

    @abstractmethod
    def truth_open(
        self, ring: RingPresentation, bindings: dict[str, Term], env: dict[str, RingElem]
    ) -> Open:
        pass

    @classmethod
    def get_pattern_info(cls) -> dict[str, Any]:
        return {"name": cls.name, "description": cls.description}

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__}(name={self.name})>"


class InvertibilityPattern(ExistentialPattern):
    name = "invertibility"
    description = "exists y. t*y = 1  has truth open D(t)"

    def match(self, phi: Exists) -> dict[str, Term] | None:
        found = _linear_equation(phi)
        if found is None or found[1] != Const("1"):
            return None
        return {"coefficient": found[0]}

    def truth_open(
        self, ring: RingPresentation, bindings: dict[str, Term], env: dict[str, RingElem]
    ) -> Open:
        return basic_open(ring, evaluate_term(ring, bindings["coefficient"], env))


class DivisibilityPattern(ExistentialPattern):
    name = "divisibility"
    description = "exists y. t*y = c  has truth open sqrt((t) : (c))"

    def match(self, phi: Exists) -> dict[str, Term] | None:
        found = _linear_equation(phi)
        if found is None:
            return None
        return {"coefficient": found[0], "target": found[1]}

    def truth_open(
        self, ring: RingPresentation, bindings: dict[str, Term], env: dict[str, RingElem]
    ) -> Open:
        t = evaluate_term(ring, bindings["coefficient"], env)
        c = evaluate_term(ring, bindings["target"], env)
        quotient = ideal_quotient(ring, Ideal(ring, [t]), Ideal(ring, [c]))
        return Open(quotient.deduplicated())


class PatternRegistry:
    """Registered existential patterns, tried in order."""

    def __init__(self):
        self._patterns: dict[str, ExistentialPattern] = {}
        self._register_all_patterns()

    def _register_all_patterns(self) -> None:
        for pattern in (InvertibilityPattern(), DivisibilityPattern()):
            self._patterns[pattern.name] = pattern
            logger.debug(f"Registered existential pattern: {pattern.name}")

    def get_pattern(self, name: str) -> ExistentialPattern | None:
        return self._patterns.get(name)

    def get_all_patterns(self) -> dict[str, ExistentialPattern]:
        return self._patterns.copy()

    def resolve(
        self, ring: RingPresentation, phi: Formula, env: dict[str, RingElem]
    ) -> tuple[str, Open] | None:
        """(pattern name, truth open) of the first matching pattern."""
        if not isinstance(phi, Exists):
            return None
        for pattern in self._patterns.values():
            bindings = pattern.match(phi)
            if bindings is not None:
                return pattern.name, pattern.truth_open(ring, bindings, env)
        return None


pattern_registry = PatternRegistry()
