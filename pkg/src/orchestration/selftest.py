"""Oracle-equivalence suites run by ``rframe selftest``.

Each suite compares a certificate-producing computation against a
definitional brute force on small finite rings and records every
disagreement. The rings and corpus sizes come from config/selftest.yaml.
"""

import logging
import random
import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Callable

from config.settings import Settings
from src.apps.freeness import generic_freeness_simple, verify_freeness
from src.apps.kernel import find_kernel_vector
from src.apps.mccoy import mccoy_regularity
from src.apps.models import Matrix
from src.apps.richman import richman_harness
from src.frame.models import Open
from src.frame.operations import all_opens, basic_open, equal, heyting, leq, meet, negation
from src.logic.checker import check_derivation
from src.logic.models import Calculus
from src.logic.nabla import nabla_translate
from src.logic.printer import format_formula
from src.logic.syntax import (
    And,
    Bottom,
    Eq,
    Exists,
    Formula,
    Implies,
    Mul,
    Or,
    Prop,
    Top,
    Var,
    D,
    const_int,
    neg,
)
from src.oracles.brute import brute_truth_open
from src.oracles.chain import entailment_derivation
from src.oracles.filters import semantic_entails
from src.oracles.prover import coherent_entails
from src.rings.arithmetic import radical_of_integer
from src.rings.parser import make_ring
from src.rings.presentation import RingPresentation
from src.semantics.models import Verdict
from src.semantics.nabla import nabla_open
from src.semantics.truth import forces, truth_open

logger = logging.getLogger(__name__)

DEFAULT_CORPUS = {
    "entailment": {"min_modulus": 2, "max_modulus": 60, "max_generators": 2},
    "truth_open": {"moduli": [4, 6, 8, 12, 30], "max_depth": 3},
    "field": {"max_modulus": 60, "counterexample": {"modulus": 4, "element": 2}},
    "double_negation": {"max_modulus": 30},
    "nabla": {"moduli": [4, 6, 12, 30], "translation_formulas": 100},
    "derivations": {"moduli": [6, 12]},
    "consistency": {"rings": ["Z/1", "Q[x]/(1)", "Z/6", "Z", "Q[x,y]/(x^2 - y)"]},
    "mccoy": {"moduli": [4, 6, 12], "exhaustive_entries": 4, "samples": 200},
    "freeness": {"moduli": [6, 30], "exhaustive_entries": 2, "samples": 100},
    "richman": {"moduli": [1, 6, 30], "samples": 50},
}


@dataclass
class SuiteStats:
    """Outcome of one selftest suite."""

    name: str
    success: bool
    checks: int
    execution_time_seconds: float
    failures: list[str] = field(default_factory=list)
    error_message: str | None = None


def inv(c: int) -> Formula:
    """exists y. c * y = 1."""
    return Exists("y", Eq(Mul(const_int(c), Var("y")), const_int(1)))


def random_formula(
    rng: random.Random,
    modulus: int,
    depth: int,
    connectives: tuple[str, ...] = ("and", "or", "implies", "not"),
    with_inv: bool = True,
) -> Formula:
    """A closed formula over element constants of Z/modulus."""
    if depth == 0 or rng.random() < 0.3:
        kind = rng.choice(["D", "eq", "top", "bottom"] + (["inv"] if with_inv else []))
        c = rng.randrange(modulus)
        if kind == "D":
            return D(c)
        if kind == "eq":
            return Eq(const_int(c), const_int(rng.randrange(modulus)))
        if kind == "inv":
            return inv(c)
        return Top() if kind == "top" else Bottom()

    op = rng.choice(connectives)
    if op == "not":
        return neg(random_formula(rng, modulus, depth - 1, connectives, with_inv))
    left = random_formula(rng, modulus, depth - 1, connectives, with_inv)
    right = random_formula(rng, modulus, depth - 1, connectives, with_inv)
    return {"and": And, "or": Or, "implies": Implies}[op](left, right)


def _squarefree(n: int) -> bool:
    return radical_of_integer(n) == n


class SelftestRunner:
    """Runs the agreement suites and collects per-suite statistics."""

    def __init__(self, settings: Settings, corpus: dict | None = None):
        self.settings = settings
        loaded = corpus if corpus is not None else settings.selftest.load_corpus_config()
        self.corpus = {**DEFAULT_CORPUS, **(loaded or {})}
        self.rng = random.Random(settings.selftest.seed)
        self.suites: dict[str, Callable[[dict], tuple[int, list[str]]]] = {
            "entailment": self._entailment,
            "truth_open": self._truth_open,
            "field": self._field,
            "double_negation": self._double_negation,
            "nabla": self._nabla,
            "derivations": self._derivations,
            "consistency": self._consistency,
            "mccoy": self._mccoy,
            "freeness": self._freeness,
            "richman": self._richman,
        }

    def _cap(self, modulus: int) -> int:
        return min(modulus, self.settings.selftest.max_modulus)

    def run(self, names: list[str] | None = None) -> list[SuiteStats]:
        """Run the named suites (all by default) in registration order."""
        selected = names or list(self.suites)
        unknown = [n for n in selected if n not in self.suites]
        if unknown:
            raise ValueError(f"Unknown selftest suites: {', '.join(unknown)}")
        return [self.run_suite(name) for name in selected]

    def run_suite(self, name: str) -> SuiteStats:
        start = time.perf_counter()
        try:
            checks, failures = self.suites[name](self.corpus[name])
        except Exception as e:
            logger.exception(f"Selftest suite {name} crashed")
            return SuiteStats(
                name=name,
                success=False,
                checks=0,
                execution_time_seconds=time.perf_counter() - start,
                error_message=str(e),
            )
        elapsed = time.perf_counter() - start
        logger.info(f"Suite {name}: {checks} checks, {len(failures)} failures in {elapsed:.1f}s")
        return SuiteStats(
            name=name,
            success=not failures,
            checks=checks,
            execution_time_seconds=elapsed,
            failures=failures,
        )

    # ------------------------------------------------------------------
    # suites

    def _entailment(self, config: dict) -> tuple[int, list[str]]:
        """Radical membership, prime filters and the coherent prover agree."""
        checks, failures = 0, []
        for n in range(config["min_modulus"], self._cap(config["max_modulus"]) + 1):
            ring = RingPresentation.modular(n)
            elements = list(ring.elements())
            for f in elements:
                for size in range(1, config["max_generators"] + 1):
                    for gs in combinations_with_replacement(elements, size):
                        algebraic = leq(basic_open(ring, f), Open.generated_by(ring, gs)) is not None
                        semantic = semantic_entails(ring, f, list(gs))
                        proved = coherent_entails(ring, f, list(gs))
                        checks += 1
                        if not algebraic == semantic == proved:
                            failures.append(
                                f"Z/{n}: D({f}) |- {[str(g) for g in gs]}: algebraic={algebraic}"
                                f" semantic={semantic} prover={proved}"
                            )
        return checks, failures

    def _truth_open(self, config: dict) -> tuple[int, list[str]]:
        """Compiled truth opens equal the literal forcing clauses."""
        checks, failures = 0, []
        per_ring = max(1, self.settings.selftest.formula_count // len(config["moduli"]))
        for n in config["moduli"]:
            ring = RingPresentation.modular(n)
            for _ in range(per_ring):
                phi = random_formula(self.rng, n, config["max_depth"])
                compiled = truth_open(ring, phi)
                checks += 1
                if not compiled.known:
                    failures.append(f"Z/{n}: {format_formula(phi)} unknown: {compiled.unknown_reason}")
                elif not equal(compiled.value, brute_truth_open(ring, phi)):
                    failures.append(f"Z/{n}: {format_formula(phi)}: {compiled.value}")
        return checks, failures

    def _field(self, config: dict) -> tuple[int, list[str]]:
        """not inv(x) => x = 0 holds everywhere exactly on reduced rings."""
        checks, failures = 0, []
        for n in range(1, self._cap(config["max_modulus"]) + 1):
            if not _squarefree(n):
                continue
            ring = RingPresentation.modular(n)
            for x in range(n):
                phi = Implies(neg(inv(x)), Eq(const_int(x), const_int(0)))
                checks += 1
                if not equal(truth_open(ring, phi).value, Open.top(ring)):
                    failures.append(f"Z/{n}: field property fails at {x}")

        counter = config["counterexample"]
        ring = RingPresentation.modular(counter["modulus"])
        x = counter["element"]
        phi = Implies(neg(inv(x)), Eq(const_int(x), const_int(0)))
        checks += 1
        if equal(truth_open(ring, phi).value, Open.top(ring)):
            failures.append(f"Z/{counter['modulus']}: field property unexpectedly holds at {x}")
        return checks, failures

    def _double_negation(self, config: dict) -> tuple[int, list[str]]:
        """not not (x = y) => x = y holds everywhere on reduced rings."""
        checks, failures = 0, []
        for n in range(1, self._cap(config["max_modulus"]) + 1):
            if not _squarefree(n):
                continue
            ring = RingPresentation.modular(n)
            for x, y in product(range(n), repeat=2):
                eq = Eq(const_int(x), const_int(y))
                checks += 1
                if not equal(truth_open(ring, Implies(neg(neg(eq)), eq)).value, Open.top(ring)):
                    failures.append(f"Z/{n}: equality of {x} and {y} is not stable")
        return checks, failures

    def _nabla(self, config: dict) -> tuple[int, list[str]]:
        """Local-operator laws of nabla and the semantics of the nabla translation."""
        checks, failures = 0, []
        beta = self.settings.semantics.beta_symbol
        for n in config["moduli"]:
            ring = RingPresentation.modular(n)
            opens = all_opens(ring)
            image = {u: nabla_open(ring, u) for u in opens}
            for u in opens:
                nu = image[u]
                checks += 3
                if leq(u, nu) is None:
                    failures.append(f"Z/{n}: {u} is not below nabla {nu}")
                if not equal(nabla_open(ring, nu), nu):
                    failures.append(f"Z/{n}: nabla is not idempotent at {u}")
                if ring.is_known_reduced and not equal(nu, negation(negation(u))):
                    failures.append(f"Z/{n}: nabla differs from double negation at {u}")
                for v in opens:
                    checks += 1
                    if not equal(nabla_open(ring, meet(u, v)), meet(nu, image[v])):
                        failures.append(f"Z/{n}: nabla does not preserve {u} & {v}")

            per_ring = max(1, config["translation_formulas"] // len(config["moduli"]))
            for _ in range(per_ring):
                phi = random_formula(self.rng, n, 3, connectives=("and", "or"), with_inv=False)
                translated = nabla_translate(phi, beta)
                base = truth_open(ring, phi).value
                for b in opens:
                    checks += 1
                    value = truth_open(ring, translated, props={beta: b}).value
                    if not equal(value, heyting(heyting(base, b), b)):
                        failures.append(f"Z/{n}: translation of {format_formula(phi)} at beta = {b}")
        return checks, failures

    def _derivations(self, config: dict) -> tuple[int, list[str]]:
        """Every leq certificate unfolds into a derivation the checker accepts."""
        checks, failures = 0, []
        for n in config["moduli"]:
            ring = RingPresentation.modular(n)
            elements = list(ring.elements())
            for f, g, h in product(elements, repeat=3):
                certificate = leq(basic_open(ring, f), Open.generated_by(ring, [g, h]))
                if certificate is None:
                    continue
                chain = entailment_derivation(certificate)
                result = check_derivation(chain.theory, chain.derivation, Calculus.GEOMETRIC)
                checks += 1
                if not result.ok:
                    failures.append(f"Z/{n}: D({f}) |- D({g}) | D({h}): {result.describe()}")
        return checks, failures

    def _consistency(self, config: dict) -> tuple[int, list[str]]:
        """1 forces false exactly in trivial rings."""
        checks, failures = 0, []
        for spec in config["rings"]:
            ring = make_ring(spec)
            verdict = forces(ring, ring.one, Bottom()).verdict
            checks += 1
            if (verdict == Verdict.TRUE) != ring.is_trivial:
                failures.append(f"{spec}: 1 |= false is {verdict.value}")
        return checks, failures

    def _matrices(self, ring: RingPresentation, shapes, exhaustive: int, samples: int):
        for rows, cols in shapes:
            size = rows * cols
            if size <= exhaustive:
                grids = product(range(ring.modulus), repeat=size)
            else:
                grids = (
                    tuple(self.rng.randrange(ring.modulus) for _ in range(size)) for _ in range(samples)
                )
            for grid in grids:
                entries = [list(grid[r * cols : (r + 1) * cols]) for r in range(rows)]
                yield Matrix(ring=ring, entries=entries, cols=cols)

    def _mccoy(self, config: dict) -> tuple[int, list[str]]:
        """Regularity of maximal minors matches injectivity and the annihilator by enumeration."""
        checks, failures = 0, []
        shapes = [(r, c) for r in (1, 2) for c in (1, 2, 3)]
        for n in config["moduli"]:
            ring = RingPresentation.modular(n)
            for matrix in self._matrices(ring, shapes, config["exhaustive_entries"], config["samples"]):
                report = mccoy_regularity(ring, matrix)
                gens = report.minors.generators
                annihilated = [
                    x for x in ring.elements() if not x.is_zero and all((x * g).is_zero for g in gens)
                ]
                injective = find_kernel_vector(matrix) is None
                checks += 1
                if not report.verify():
                    failures.append(f"Z/{n}: report for {matrix} does not verify")
                if report.regular != (not annihilated) or report.regular != injective:
                    failures.append(
                        f"Z/{n}: {matrix} regular={report.regular} annihilated={len(annihilated)}"
                        f" injective={injective}"
                    )
        return checks, failures

    def _freeness(self, config: dict) -> tuple[int, list[str]]:
        """Generic freeness returns a verified non-nilpotent localizing element."""
        checks, failures = 0, []
        shapes = [(0, 1), (1, 1), (1, 2), (2, 1), (2, 2)]
        for n in config["moduli"]:
            ring = RingPresentation.modular(n)
            for matrix in self._matrices(ring, shapes, config["exhaustive_entries"], config["samples"]):
                result = generic_freeness_simple(ring, matrix)
                checks += 1
                if not verify_freeness(result):
                    failures.append(f"Z/{n}: freeness of coker {matrix} does not verify")
        return checks, failures

    def _richman(self, config: dict) -> tuple[int, list[str]]:
        """Wide matrices over nontrivial reduced rings always have a kernel vector."""
        checks, failures = 0, []
        shapes = [(1, 2), (1, 3), (2, 3)]
        for n in config["moduli"]:
            ring = RingPresentation.modular(n)
            for matrix in self._matrices(ring, shapes, 0, config["samples"]):
                outcome = richman_harness(ring, matrix)
                checks += 1
                if ring.is_trivial:
                    if not (outcome.certificate and outcome.certificate.verify()):
                        failures.append(f"Z/{n}: no verified 1 = 0 for {matrix}")
                elif outcome.injective or not matrix.kills(outcome.kernel_vector):
                    failures.append(f"Z/{n}: {matrix} reported injective")
        return checks, failures
