"""Derivation trees and their YAML form."""

from dataclasses import dataclass, field
from typing import Any, Iterator

import yaml

from .models import DerivationFormatError, FormulaSyntaxError
from .parser import parse_sequent, parse_term
from .printer import format_sequent, format_term
from .syntax import Sequent, Term


@dataclass(frozen=True, eq=True)
class Derivation:
    """One rule application with its premises.

    ``data`` carries rule-specific choices: ``index`` for indexed rules and
    ``substitution`` (variable name to Term) for substitution nodes.
    """

    rule: str
    conclusion: Sequent
    premises: tuple["Derivation", ...] = ()
    data: dict[str, Any] = field(default_factory=dict, hash=False)

    def walk(self, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], "Derivation"]]:
        """Pre-order traversal yielding (path, node)."""
        yield path, self
        for i, premise in enumerate(self.premises):
            yield from premise.walk(path + (i,))

    def size(self) -> int:
        return sum(1 for _ in self.walk())

    def depth(self) -> int:
        return 1 + max((p.depth() for p in self.premises), default=0)


def derivation_to_record(d: Derivation) -> dict[str, Any]:
    record: dict[str, Any] = {"rule": d.rule, "conclusion": format_sequent(d.conclusion)}
    if d.data:
        record["data"] = {key: _dump_value(value) for key, value in d.data.items()}
    if d.premises:
        record["premises"] = [derivation_to_record(p) for p in d.premises]
    return record


def _dump_value(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: format_term(v) if not isinstance(v, (int, str)) else v for k, v in value.items()}
    return value


def derivation_from_record(record: Any, constants: tuple[str, ...] = ()) -> Derivation:
    if not isinstance(record, dict):
        raise DerivationFormatError(f"Derivation node must be a mapping, got {type(record).__name__}")
    unknown = set(record) - {"rule", "conclusion", "data", "premises"}
    if unknown:
        raise DerivationFormatError(f"Unknown derivation keys: {sorted(unknown)}")
    if not isinstance(record.get("rule"), str) or not isinstance(record.get("conclusion"), str):
        raise DerivationFormatError("Derivation node needs string 'rule' and 'conclusion'")

    try:
        conclusion = parse_sequent(record["conclusion"], constants)
    except FormulaSyntaxError as e:
        raise DerivationFormatError(f"Bad conclusion {record['conclusion']!r}: {e}", record["conclusion"])

    data = dict(record.get("data") or {})
    if "substitution" in data:
        data["substitution"] = _load_substitution(data["substitution"], conclusion, constants)
    if "index" in data and not isinstance(data["index"], int):
        raise DerivationFormatError(f"'index' must be an integer, got {data['index']!r}")

    premises = record.get("premises") or []
    if not isinstance(premises, list):
        raise DerivationFormatError("'premises' must be a list")
    return Derivation(
        rule=record["rule"],
        conclusion=conclusion,
        premises=tuple(derivation_from_record(p, constants) for p in premises),
        data=data,
    )


def _load_substitution(raw: Any, conclusion: Sequent, constants: tuple[str, ...]) -> dict[str, Term]:
    if not isinstance(raw, dict):
        raise DerivationFormatError("'substitution' must map variable names to terms")
    result: dict[str, Term] = {}
    for name, text in raw.items():
        try:
            result[str(name)] = parse_term(str(text), conclusion.context, constants)
        except FormulaSyntaxError as e:
            raise DerivationFormatError(f"Bad substitution term {text!r}: {e}", str(text))
    return result


def dump_derivation(d: Derivation) -> str:
    return yaml.safe_dump(derivation_to_record(d), sort_keys=False, allow_unicode=True)


def load_derivation(text: str, constants: tuple[str, ...] = ()) -> Derivation:
    try:
        record = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise DerivationFormatError(f"Derivation file is not valid YAML: {e}")
    return derivation_from_record(record, constants)


def load_axioms(text: str, constants: tuple[str, ...] = ()) -> list[Sequent]:
    """Axioms file: a YAML list of sequent strings, or plain text with one sequent per line."""
    try:
        loaded = yaml.safe_load(text)
    except yaml.YAMLError:
        loaded = None
    if not (isinstance(loaded, list) and all(isinstance(s, str) for s in loaded)):
        loaded = [
            line.strip().removeprefix("- ").strip().strip("'\"")
            for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
    try:
        return [parse_sequent(str(s), constants) for s in loaded]
    except FormulaSyntaxError as e:
        raise DerivationFormatError(f"Bad axiom: {e}")
