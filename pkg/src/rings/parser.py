"""Parser for the textual ring grammar.

    Z | Z/<n> | <field>[<vars>] | <field>[<vars>]/(<g1>, ..., <gk>)

with <field> one of Q or F<p>.
"""

import logging
import re

from config.settings import settings
from .models import Reducedness, RingParseError
from .presentation import RingPresentation

logger = logging.getLogger(__name__)

_MODULAR = re.compile(r"^Z\s*/\s*(\d+)$")
_POLYNOMIAL = re.compile(r"^(Q|F(\d+))\s*\[([^\]]*)\]\s*(?:/\s*\((.*)\))?$", re.DOTALL)


def make_ring(spec: str, reducedness: Reducedness | str | None = None) -> RingPresentation:
    """Parse and validate a ring description.

    Args:
        spec: Ring description text, e.g. "Z/12" or "Q[x,y]/(x^2 - y)"
        reducedness: Optional user assertion for polynomial quotients

    Returns:
        Validated RingPresentation

    Raises:
        RingParseError: Malformed description or unsupported coefficient field
    """
    text = spec.strip()
    if reducedness is not None:
        reducedness = Reducedness(reducedness)

    if text == "Z":
        return RingPresentation.integers()

    match = _MODULAR.match(text)
    if match:
        modulus = int(match.group(1))
        if modulus < 1:
            raise RingParseError(f"Modulus must be positive in {spec!r}")
        return RingPresentation.modular(modulus)

    match = _POLYNOMIAL.match(text)
    if not match:
        raise RingParseError(f"Malformed ring description {spec!r}")

    characteristic = int(match.group(2)) if match.group(2) else 0
    variables = [v.strip() for v in match.group(3).split(",") if v.strip()]
    relations_text = match.group(4)
    relations = []
    if relations_text is not None:
        relations = [g.strip() for g in relations_text.split(",")]
        if any(not g for g in relations):
            raise RingParseError(f"Empty relation in {spec!r}")

    ring = RingPresentation.polynomial(
        variables,
        relations,
        characteristic=characteristic,
        reducedness=reducedness,
        max_groebner_pairs=settings.search.max_groebner_pairs,
    )
    logger.info(f"Parsed ring {ring.spec}")
    return ring
