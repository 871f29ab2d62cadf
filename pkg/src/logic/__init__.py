"""Formulas, sequents, the nabla translation and derivation checking."""

from .checker import check_derivation, rule_registry, well_formed
from .derivation import (
    Derivation,
    derivation_from_record,
    derivation_to_record,
    dump_derivation,
    load_axioms,
    load_derivation,
)
from .fragments import classify, classify_sequent
from .models import (
    Calculus,
    CaptureError,
    CheckResult,
    DerivationFormatError,
    FormulaSyntaxError,
    Fragment,
    LogicError,
    ReservedSymbolError,
    SortError,
    UnboundVariableError,
)
from .nabla import nabla, nabla_translate, unguarded_positive
from .parser import parse_formula, parse_sequent, parse_term
from .printer import format_formula, format_sequent, format_term
from .syntax import (
    Add,
    And,
    BigAnd,
    BigOr,
    Bottom,
    Const,
    D,
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
    atoms,
    conj,
    const_int,
    disj,
    free_vars,
    neg,
    substitute,
)

__all__ = [
    "Add",
    "And",
    "BigAnd",
    "BigOr",
    "Bottom",
    "Calculus",
    "CaptureError",
    "CheckResult",
    "Const",
    "D",
    "Derivation",
    "DerivationFormatError",
    "Eq",
    "Exists",
    "Forall",
    "Formula",
    "FormulaSyntaxError",
    "Fragment",
    "Implies",
    "LogicError",
    "Mul",
    "Neg",
    "Or",
    "Pow",
    "Prop",
    "Rel",
    "ReservedSymbolError",
    "Sequent",
    "SortError",
    "Sub",
    "Term",
    "Top",
    "UnboundVariableError",
    "Var",
    "atoms",
    "check_derivation",
    "classify",
    "classify_sequent",
    "conj",
    "const_int",
    "derivation_from_record",
    "derivation_to_record",
    "disj",
    "dump_derivation",
    "format_formula",
    "format_sequent",
    "format_term",
    "free_vars",
    "load_axioms",
    "load_derivation",
    "nabla",
    "nabla_translate",
    "neg",
    "parse_formula",
    "parse_sequent",
    "parse_term",
    "rule_registry",
    "substitute",
    "unguarded_positive",
    "well_formed",
]
