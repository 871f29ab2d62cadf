"""Recursive-descent parser for terms, formulas and sequents.

Concrete syntax (ASCII, with Unicode alternatives)::

    sequent   := ['[' x:A {, y:A} ']'] formula '|-' formula
    formula   := disj ['=>' formula]                       (right associative)
    disj      := conj {'|' conj}
    conj      := unary {'&' unary}
    unary     := 'not' unary | ('forall'|'exists') x[:A] '.' formula | atom
    atom      := 'true' | 'false' | 'D' '(' term ')' | 'nabla' '(' formula ')'
               | ('Or'|'And') '{' formula, ... '}'
               | ('Or'|'And') '[' i 'in' m '..' n ']' '(' formula ')'
               | beta | '(' formula ')' | term '=' term
    term      := factor {('+'|'-') factor}, '*' and '^' as usual

An identifier resolves to a variable if it is in scope (sequent context,
quantifier or index binder), otherwise to a ring constant if it names an
indeterminate of the ring, otherwise it is an error.
"""

import re
from dataclasses import dataclass

from config.settings import settings
from .models import FormulaSyntaxError, SortError, UnboundVariableError
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
    const_int,
    neg,
    substitute,
)

RING_SORT = "A"

TOKEN_SPEC = [
    ("SKIP", r"\s+"),
    ("TURNSTILE", r"\|-|⊢"),
    ("IMPLIES", r"=>|⇒|→"),
    ("EQ", r"="),
    ("AND", r"&|∧"),
    ("OR", r"\||∨"),
    ("NOT", r"¬"),
    ("FORALL", r"∀"),
    ("EXISTS", r"∃"),
    ("TOP", r"⊤"),
    ("BOTTOM", r"⊥"),
    ("NABLA", r"∇"),
    ("RANGE", r"\.\."),
    ("DOT", r"\."),
    ("LP", r"\("),
    ("RP", r"\)"),
    ("LB", r"\["),
    ("RB", r"\]"),
    ("LC", r"\{"),
    ("RC", r"\}"),
    ("COMMA", r","),
    ("COLON", r":"),
    ("PLUS", r"\+"),
    ("MINUS", r"-"),
    ("TIMES", r"\*"),
    ("CARET", r"\^"),
    ("NUMBER", r"\d+"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("MISMATCH", r"."),
]

TOKEN_REGEX = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_SPEC))

KEYWORDS = {
    "not": "NOT",
    "forall": "FORALL",
    "exists": "EXISTS",
    "true": "TOP",
    "false": "BOTTOM",
    "nabla": "NABLA",
}

RESERVED = set(KEYWORDS) | {"D", "Or", "And", "in"}


@dataclass
class Token:
    type: str
    value: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    for match in TOKEN_REGEX.finditer(text):
        kind = match.lastgroup
        value = match.group()
        if kind == "SKIP":
            continue
        if kind == "MISMATCH":
            raise FormulaSyntaxError(f"Unexpected character {value!r}", text, match.start())
        if kind == "NAME" and value in KEYWORDS:
            kind = KEYWORDS[value]
        tokens.append(Token(kind, value, match.start()))
    tokens.append(Token("END", "", len(text)))
    return tokens


class Parser:
    """One-shot parser over a token list; backtracks only around parentheses."""

    def __init__(
        self,
        text: str,
        variables: tuple[str, ...] = (),
        constants: tuple[str, ...] = (),
        beta_symbol: str | None = None,
    ):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.scope: list[str] = list(variables)
        self.constants = set(constants)
        self.beta_symbol = beta_symbol or settings.semantics.beta_symbol

    # ------------------------------------------------------------------
    # token helpers

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def pop(self, expected: str | None = None) -> Token:
        token = self.peek()
        if expected and token.type != expected:
            shown = token.value or "end of input"
            raise FormulaSyntaxError(f"Expected {expected}, got {shown!r}", self.text, token.position)
        self.index += 1
        return token

    def accept(self, kind: str) -> Token | None:
        if self.peek().type == kind:
            return self.pop()
        return None

    def expect_end(self) -> None:
        token = self.peek()
        if token.type != "END":
            raise FormulaSyntaxError(f"Unexpected {token.value!r}", self.text, token.position)

    # ------------------------------------------------------------------
    # sequents and formulas

    def parse_sequent(self) -> Sequent:
        context: list[str] = []
        if self.accept("LB"):
            if not self.accept("RB"):
                while True:
                    context.append(self.parse_binder())
                    if self.accept("RB"):
                        break
                    self.pop("COMMA")
        if len(set(context)) != len(context):
            raise FormulaSyntaxError(f"Repeated context variable in {context}", self.text)
        self.scope = context + self.scope
        antecedent = self.parse_formula()
        self.pop("TURNSTILE")
        succedent = self.parse_formula()
        self.expect_end()
        return Sequent(tuple(context), antecedent, succedent)

    def parse_binder(self) -> str:
        name = self.pop("NAME")
        if name.value in RESERVED:
            raise FormulaSyntaxError(f"Reserved word {name.value!r} used as variable", self.text, name.position)
        if self.accept("COLON"):
            sort = self.pop("NAME")
            if sort.value != RING_SORT:
                raise SortError(f"Unknown sort {sort.value!r}; only {RING_SORT} exists", self.text, sort.position)
        return name.value

    def parse_formula(self) -> Formula:
        left = self.parse_disjunction()
        if self.accept("IMPLIES"):
            return Implies(left, self.parse_formula())
        return left

    def parse_disjunction(self) -> Formula:
        left = self.parse_conjunction()
        while self.accept("OR"):
            left = Or(left, self.parse_conjunction())
        return left

    def parse_conjunction(self) -> Formula:
        left = self.parse_unary()
        while self.accept("AND"):
            left = And(left, self.parse_unary())
        return left

    def parse_unary(self) -> Formula:
        token = self.peek()
        if token.type == "NOT":
            self.pop()
            return neg(self.parse_unary())
        if token.type in ("FORALL", "EXISTS"):
            self.pop()
            var = self.parse_binder()
            self.pop("DOT")
            self.scope.append(var)
            try:
                body = self.parse_formula()
            finally:
                self.scope.pop()
            return Forall(var, body) if token.type == "FORALL" else Exists(var, body)
        return self.parse_atom()

    def parse_atom(self) -> Formula:
        token = self.peek()
        if token.type == "TOP":
            self.pop()
            return Top()
        if token.type == "BOTTOM":
            self.pop()
            return Bottom()
        if token.type == "NABLA":
            self.pop()
            self.pop("LP")
            inner = self.parse_formula()
            self.pop("RP")
            answer = Prop(self.beta_symbol)
            return Implies(Implies(inner, answer), answer)
        if token.type == "NAME" and token.value == "D" and self.peek(1).type == "LP":
            self.pop()
            self.pop("LP")
            term = self.parse_term()
            self.pop("RP")
            return Rel("D", (term,))
        if token.type == "NAME" and token.value in ("Or", "And"):
            return self.parse_indexed()
        if token.type == "NAME" and token.value == self.beta_symbol and token.value not in self.scope:
            self.pop()
            return Prop(token.value)
        if token.type == "LP":
            saved = self.index
            try:
                self.pop()
                inner = self.parse_formula()
                self.pop("RP")
                if self.peek().type not in ("EQ", "PLUS", "MINUS", "TIMES", "CARET"):
                    return inner
            except FormulaSyntaxError:
                pass
            self.index = saved
        return self.parse_equation()

    def parse_equation(self) -> Formula:
        left = self.parse_term()
        self.pop("EQ")
        return Eq(left, self.parse_term())

    def parse_indexed(self) -> Formula:
        head = self.pop()
        build = BigOr if head.value == "Or" else BigAnd
        if self.accept("LC"):
            items: list[Formula] = []
            if not self.accept("RC"):
                while True:
                    items.append(self.parse_formula())
                    if self.accept("RC"):
                        break
                    self.pop("COMMA")
            return build(tuple(items))

        self.pop("LB")
        var = self.parse_binder()
        keyword = self.pop("NAME")
        if keyword.value != "in":
            raise FormulaSyntaxError("Expected 'in' in index range", self.text, keyword.position)
        low = int(self.pop("NUMBER").value)
        self.pop("RANGE")
        high = int(self.pop("NUMBER").value)
        self.pop("RB")
        self.pop("LP")
        self.scope.append(var)
        try:
            body = self.parse_formula()
        finally:
            self.scope.pop()
        self.pop("RP")
        return build(tuple(substitute(body, {var: const_int(k)}) for k in range(low, high + 1)))

    # ------------------------------------------------------------------
    # terms

    def parse_term(self) -> Term:
        left = self.parse_product()
        while self.peek().type in ("PLUS", "MINUS"):
            op = self.pop()
            right = self.parse_product()
            left = Add(left, right) if op.type == "PLUS" else Sub(left, right)
        return left

    def parse_product(self) -> Term:
        left = self.parse_factor()
        while self.accept("TIMES"):
            left = Mul(left, self.parse_factor())
        return left

    def parse_factor(self) -> Term:
        if self.accept("MINUS"):
            return Neg(self.parse_factor())
        base = self.parse_primary()
        if self.accept("CARET"):
            return Pow(base, int(self.pop("NUMBER").value))
        return base

    def parse_primary(self) -> Term:
        token = self.peek()
        if token.type == "NUMBER":
            self.pop()
            return Const(str(int(token.value)))
        if token.type == "LP":
            self.pop()
            term = self.parse_term()
            self.pop("RP")
            return term
        if token.type == "NAME" and token.value not in RESERVED:
            self.pop()
            if token.value in self.scope:
                return Var(token.value)
            if token.value in self.constants:
                return Const(token.value)
            raise UnboundVariableError(f"Unbound variable {token.value!r}", self.text, token.position)
        shown = token.value or "end of input"
        raise FormulaSyntaxError(f"Expected a term, got {shown!r}", self.text, token.position)


def parse_formula(
    text: str,
    variables: tuple[str, ...] | list[str] = (),
    constants: tuple[str, ...] | list[str] = (),
) -> Formula:
    """Parse a formula whose free variables must be among ``variables``."""
    parser = Parser(text, tuple(variables), tuple(constants))
    formula = parser.parse_formula()
    parser.expect_end()
    return formula


def parse_sequent(text: str, constants: tuple[str, ...] | list[str] = ()) -> Sequent:
    """Parse ``[x:A, ...] phi |- psi``; an omitted context is empty."""
    return Parser(text, (), tuple(constants)).parse_sequent()


def parse_term(
    text: str,
    variables: tuple[str, ...] | list[str] = (),
    constants: tuple[str, ...] | list[str] = (),
) -> Term:
    parser = Parser(text, tuple(variables), tuple(constants))
    term = parser.parse_term()
    parser.expect_end()
    return term
