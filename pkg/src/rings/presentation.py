"""Ring presentations and normal-form elements.

Three kinds are supported: the integers, the integers modulo n and quotients
of polynomial rings over Q or F_p. Polynomial quotients reduce every element
modulo a reduced Gröbner basis of the relation ideal (degree reverse
lexicographic order over the declared variables), which is computed once at
construction time and never changes afterwards.
"""

import logging
import re
from typing import Iterator

from sympy import Integer, Rational, Symbol, factorint, isprime, mod_inverse
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.domains import GF, QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing

from .buchberger import divide, groebner_with_cofactors
from .models import (
    CoefficientField,
    MixedRingError,
    Reducedness,
    ReducednessError,
    RingKind,
    RingParseError,
)

logger = logging.getLogger(__name__)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_LITERAL_CHARS = re.compile(r"^[\w\s+\-*/^()]*$")
_IDENTIFIER = re.compile(r"[A-Za-z_]\w*")


class RingPresentation:
    """A computable commutative ring with unit.

    Instances are immutable once constructed. Use the classmethod constructors
    (or ``make_ring`` from the parser module) rather than ``__init__``.
    """

    def __init__(
        self,
        kind: RingKind,
        *,
        modulus: int | None = None,
        field: CoefficientField | None = None,
        characteristic: int = 0,
        variables: tuple[str, ...] = (),
        relations: tuple[str, ...] = (),
        reducedness: Reducedness | None = None,
        max_groebner_pairs: int = 20_000,
    ):
        self.kind = kind
        self.modulus = modulus
        self.field = field
        self.characteristic = characteristic
        self.variables = variables
        self._poly_ring: PolyRing | None = None
        self._relation_basis: tuple[PolyElement, ...] = ()

        if kind == RingKind.MODULAR_INTEGERS:
            if modulus is None or modulus < 1:
                raise RingParseError(f"Modulus must be a positive integer, got {modulus}")
        if kind == RingKind.POLYNOMIAL_QUOTIENT:
            self._init_polynomial(relations, max_groebner_pairs)

        self.spec = self._canonical_spec()
        self.reducedness = self._resolve_reducedness(reducedness)
        logger.debug(f"Constructed ring {self.spec} ({self.reducedness.value})")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def integers(cls) -> "RingPresentation":
        return cls(RingKind.INTEGERS)

    @classmethod
    def modular(cls, modulus: int) -> "RingPresentation":
        return cls(RingKind.MODULAR_INTEGERS, modulus=modulus)

    @classmethod
    def polynomial(
        cls,
        variables: list[str] | tuple[str, ...],
        relations: list[str] | tuple[str, ...] = (),
        characteristic: int = 0,
        reducedness: Reducedness | None = None,
        max_groebner_pairs: int = 20_000,
    ) -> "RingPresentation":
        """Build Q[vars]/(relations) (characteristic 0) or F_p[vars]/(relations)."""
        field = CoefficientField.RATIONALS if characteristic == 0 else CoefficientField.PRIME_FIELD
        return cls(
            RingKind.POLYNOMIAL_QUOTIENT,
            field=field,
            characteristic=characteristic,
            variables=tuple(variables),
            relations=tuple(relations),
            reducedness=reducedness,
            max_groebner_pairs=max_groebner_pairs,
        )

    def _init_polynomial(self, relations: tuple[str, ...], max_pairs: int) -> None:
        if not self.variables:
            raise RingParseError("Polynomial rings need at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise RingParseError(f"Variable names must be distinct: {self.variables}")
        for name in self.variables:
            if not _IDENTIFIER.fullmatch(name):
                raise RingParseError(f"Invalid variable name {name!r}")

        if self.field == CoefficientField.PRIME_FIELD:
            if not isprime(self.characteristic):
                raise RingParseError(
                    f"Unsupported coefficient field F{self.characteristic}: not a prime"
                )
            domain = GF(self.characteristic)
        else:
            domain = QQ

        self._poly_ring = PolyRing(",".join(self.variables), domain, grevlex)
        gens = [self._parse_polynomial(text) for text in relations]
        basis, _ = groebner_with_cofactors(gens, max_pairs=max_pairs)
        self._relation_basis = tuple(basis)

    # ------------------------------------------------------------------
    # structure

    @property
    def poly_ring(self) -> PolyRing:
        if self._poly_ring is None:
            raise MixedRingError("Ring has no polynomial structure", ring=self.spec)
        return self._poly_ring

    @property
    def relation_basis(self) -> tuple[PolyElement, ...]:
        """Reduced Gröbner basis of the relation ideal (empty for free rings)."""
        return self._relation_basis

    @property
    def is_polynomial(self) -> bool:
        return self.kind == RingKind.POLYNOMIAL_QUOTIENT

    @property
    def is_principal(self) -> bool:
        """Integers and modular integers: every ideal is generated by a gcd."""
        return self.kind in (RingKind.INTEGERS, RingKind.MODULAR_INTEGERS)

    @property
    def is_finite(self) -> bool:
        return self.kind == RingKind.MODULAR_INTEGERS

    @property
    def is_trivial(self) -> bool:
        """True iff 1 = 0 in this ring."""
        return self.one.is_zero

    @property
    def size(self) -> int:
        if not self.is_finite:
            raise MixedRingError("Ring is infinite", ring=self.spec)
        return self.modulus

    @property
    def is_known_reduced(self) -> bool:
        return self.reducedness == Reducedness.KNOWN_REDUCED

    @property
    def zero(self) -> "RingElem":
        return self.element(0)

    @property
    def one(self) -> "RingElem":
        return self.element(1)

    def elements(self) -> Iterator["RingElem"]:
        """Enumerate the carrier of a finite ring in residue order."""
        for value in range(self.size):
            yield RingElem(self, value)

    def _canonical_spec(self) -> str:
        if self.kind == RingKind.INTEGERS:
            return "Z"
        if self.kind == RingKind.MODULAR_INTEGERS:
            return f"Z/{self.modulus}"
        field = "Q" if self.field == CoefficientField.RATIONALS else f"F{self.characteristic}"
        head = f"{field}[{','.join(self.variables)}]"
        if not self._relation_basis:
            return head
        rels = ", ".join(self._format_polynomial(g) for g in self._relation_basis)
        return f"{head}/({rels})"

    def _resolve_reducedness(self, asserted: Reducedness | None) -> Reducedness:
        if self.kind == RingKind.INTEGERS:
            computed = Reducedness.KNOWN_REDUCED
        elif self.kind == RingKind.MODULAR_INTEGERS:
            squarefree = all(e == 1 for e in factorint(self.modulus).values())
            computed = Reducedness.KNOWN_REDUCED if squarefree else Reducedness.KNOWN_NON_REDUCED
        elif not self._relation_basis or self._relation_basis == (self.poly_ring.one,):
            computed = Reducedness.KNOWN_REDUCED
        else:
            computed = Reducedness.UNKNOWN

        if asserted is None or asserted == Reducedness.UNKNOWN:
            return computed
        if computed == Reducedness.UNKNOWN:
            logger.warning(f"Trusting asserted reducedness {asserted.value} for {self.spec}")
            return asserted
        if asserted != computed:
            raise ReducednessError(
                f"Asserted {asserted.value} but the ring is {computed.value}", ring=self.spec
            )
        return computed

    # ------------------------------------------------------------------
    # elements

    def normalize(self, value):
        """Canonical representative of a raw payload."""
        if self.kind == RingKind.INTEGERS:
            return int(value)
        if self.kind == RingKind.MODULAR_INTEGERS:
            return int(value) % self.modulus
        if not isinstance(value, PolyElement):
            value = self.poly_ring(value)
        elif value.ring != self.poly_ring:
            raise MixedRingError("Polynomial belongs to another ring", ring=self.spec)
        if not self._relation_basis:
            return value
        return divide(value, list(self._relation_basis))[1]

    def element(self, value) -> "RingElem":
        """Coerce an int, literal string, PolyElement or RingElem into this ring."""
        if isinstance(value, RingElem):
            if value.ring != self:
                raise MixedRingError(
                    f"Element of {value.ring.spec} used in {self.spec}", ring=self.spec
                )
            return value
        if isinstance(value, str):
            return self.parse_element(value)
        return RingElem(self, self.normalize(value))

    def parse_element(self, text: str) -> "RingElem":
        """Parse an element literal using + - * ^ and integer/rational coefficients."""
        if self.is_polynomial:
            return RingElem(self, self.normalize(self._parse_polynomial(text)))

        expr = self._sympify(text, allowed=())
        if isinstance(expr, Integer):
            return RingElem(self, self.normalize(int(expr)))
        if isinstance(expr, Rational) and self.kind == RingKind.MODULAR_INTEGERS:
            try:
                inverse = mod_inverse(int(expr.q), self.modulus)
            except ValueError as e:
                raise RingParseError(
                    f"Denominator of {text!r} is not invertible", ring=self.spec, original_error=e
                )
            return RingElem(self, self.normalize(int(expr.p) * inverse))
        raise RingParseError(f"Not an element literal: {text!r}", ring=self.spec)

    def _parse_polynomial(self, text: str) -> PolyElement:
        expr = self._sympify(text, allowed=self.variables)
        try:
            return self.poly_ring.from_expr(expr)
        except Exception as e:
            raise RingParseError(
                f"Cannot read {text!r} as a polynomial", ring=getattr(self, "spec", None),
                original_error=e,
            )

    def _sympify(self, text: str, allowed: tuple[str, ...]):
        if not text.strip() or not _LITERAL_CHARS.match(text):
            raise RingParseError(f"Malformed element literal {text!r}")
        for name in _IDENTIFIER.findall(text):
            if name not in allowed:
                raise RingParseError(f"Unknown symbol {name!r} in {text!r}")
        local = {name: Symbol(name) for name in allowed}
        try:
            return parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
        except Exception as e:
            raise RingParseError(f"Malformed element literal {text!r}", original_error=e)

    def format(self, elem: "RingElem") -> str:
        if self.is_polynomial:
            return self._format_polynomial(elem.value)
        return str(elem.value)

    def _format_polynomial(self, poly: PolyElement) -> str:
        if not poly:
            return "0"
        parts: list[str] = []
        for monom, coeff in poly.terms():
            num, den = self._coefficient_parts(coeff)
            negative = num < 0
            num = abs(num)
            factors = []
            for name, exp in zip(self.variables, monom):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            scalar = str(num) if den == 1 else f"{num}/{den}"
            if not factors:
                body = scalar
            elif scalar == "1":
                body = "*".join(factors)
            else:
                body = "*".join([scalar] + factors)
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)

    def _coefficient_parts(self, coeff) -> tuple[int, int]:
        if self.field == CoefficientField.PRIME_FIELD:
            return int(coeff) % self.characteristic, 1
        return int(coeff.numerator), int(coeff.denominator)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingPresentation) and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"<RingPresentation({self.spec}, {self.reducedness.value})>"


class RingElem:
    """An element of a RingPresentation held in its unique normal form."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: RingPresentation, value):
        self.ring = ring
        self.value = value

    def _coerce(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise MixedRingError(
                    f"Cannot combine elements of {self.ring.spec} and {other.ring.spec}"
                )
            return other
        if isinstance(other, int):
            return self.ring.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.ring.normalize(self.value + other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.ring.normalize(self.value - other.value))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElem(self.ring, self.ring.normalize(self.value * other.value))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, self.ring.normalize(-self.value))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a non-negative integer, got {exponent}")
        if self.ring.kind == RingKind.MODULAR_INTEGERS:
            return RingElem(self.ring, pow(self.value, exponent, self.ring.modulus))
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    @property
    def is_zero(self) -> bool:
        if isinstance(self.value, PolyElement):
            return not self.value
        return self.value == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.ring.element(other)
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self) -> int:
        if isinstance(self.value, PolyElement):
            return hash((self.ring.spec, frozenset(self.value.items())))
        return hash((self.ring.spec, self.value))

    def __str__(self) -> str:
        return self.ring.format(self)

    def __repr__(self) -> str:
        return f"RingElem({self.ring.spec}: {self})"
