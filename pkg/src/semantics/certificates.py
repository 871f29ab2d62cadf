"""Forcing certificates: partitions, witnesses and their independent checker.

A certificate for f |= phi mirrors phi. At a disjunction or existential the
position f is split by a partition f^n = f*g_1 + ... + f*g_m and each branch
continues at position f*g_i, choosing a disjunct or a witness. Atoms are
decided directly in the localization at the current position.
"""

import logging
from typing import Any

from config.settings import settings
from src.ideals.membership import radical_membership
from src.ideals.models import Ideal
from src.localizations.models import LocalizedElem
from src.localizations.operations import loc_equal
from src.logic.printer import format_formula
from src.logic.syntax import (
    And,
    BigAnd,
    BigOr,
    Bottom,
    Eq,
    Exists,
    Formula,
    Or,
    Rel,
    Top,
)
from src.rings.arithmetic import is_nilpotent
from src.rings.models import UnsupportedRingError
from src.rings.presentation import RingElem, RingPresentation
from .evaluation import evaluate_local, rebase
from .models import (
    BranchCertificate,
    ForcingCertificate,
    ForcingCertificateError,
    Partition,
    Verdict,
    Witness,
)
from .truth import forces, truth_open

logger = logging.getLogger(__name__)


def verify_partition(ring: RingPresentation, f: RingElem, partition: Partition) -> bool:
    """Check f^n = f*g_1 + ... + f*g_m by ring arithmetic."""
    f = ring.element(f)
    total = ring.zero
    for g in partition.parts:
        total = total + f * ring.element(g)
    return f**partition.exponent == total


def _disjuncts(phi: Formula) -> list[Formula] | None:
    if isinstance(phi, Or):
        return [phi.left, phi.right]
    if isinstance(phi, BigOr):
        return list(phi.items)
    return None


def _conjuncts(phi: Formula) -> list[Formula] | None:
    if isinstance(phi, And):
        return [phi.left, phi.right]
    if isinstance(phi, BigAnd):
        return list(phi.items)
    return None


class _Checker:
    def __init__(self, ring: RingPresentation):
        self.ring = ring

    def check(
        self,
        phi: Formula,
        position: RingElem,
        env: dict[str, LocalizedElem],
        cert: ForcingCertificate,
    ) -> bool:
        ring = self.ring
        if isinstance(phi, Top):
            return True
        if isinstance(phi, Bottom):
            return is_nilpotent(ring, position) is not None
        if isinstance(phi, Eq):
            left = evaluate_local(position, phi.left, env)
            right = evaluate_local(position, phi.right, env)
            return loc_equal(left, right).equal
        if isinstance(phi, Rel) and phi.name == "D" and len(phi.args) == 1:
            value = evaluate_local(position, phi.args[0], env)
            return radical_membership(ring, Ideal(ring, [value.numerator]), position) is not None

        parts = _conjuncts(phi)
        if parts is not None:
            if len(cert.children) != len(parts):
                raise ForcingCertificateError(
                    f"Conjunction needs {len(parts)} sub-certificates, got {len(cert.children)}"
                )
            return all(self.check(p, position, env, c) for p, c in zip(parts, cert.children))

        options = _disjuncts(phi)
        if options is None and not isinstance(phi, Exists):
            raise ForcingCertificateError(
                f"No certificate structure for {format_formula(phi)}"
            )
        partition = cert.partition
        if partition is None:
            raise ForcingCertificateError(f"Missing partition at {format_formula(phi)}")
        limit = settings.oracle.partition_summand_limit
        if limit is not None and len(partition.parts) > limit:
            raise ForcingCertificateError(
                f"Partition has {len(partition.parts)} parts, above the limit of {limit}"
            )
        if len(cert.branches) != len(partition.parts):
            raise ForcingCertificateError(
                f"Partition has {len(partition.parts)} parts but {len(cert.branches)} branches"
            )
        if not verify_partition(ring, position, partition):
            logger.debug(f"Partition identity fails at position {position}")
            return False

        for g, branch in zip(partition.parts, cert.branches):
            g = ring.element(g)
            here = position * g
            local = {name: rebase(value, g) for name, value in env.items()}
            if options is not None:
                if branch.choice >= len(options):
                    raise ForcingCertificateError(f"Disjunct index {branch.choice} out of range")
                target = options[branch.choice]
            else:
                if branch.witness is None:
                    raise ForcingCertificateError(f"Missing witness for {phi.var}")
                local[phi.var] = LocalizedElem(
                    here, ring.element(branch.witness.numerator), branch.witness.exponent
                )
                target = phi.body
            if not self.check(target, here, local, branch.certificate):
                return False
        return True


def check_forcing_certificate(
    ring: RingPresentation,
    f: RingElem,
    phi: Formula,
    env: dict[str, RingElem] | None,
    certificate: ForcingCertificate,
) -> bool:
    """Verify a forcing certificate by ring arithmetic alone.

    A verified certificate proves f |= phi even where truth_open is unknown.

    Raises:
        ForcingCertificateError: Certificate shape does not match phi
    """
    f = ring.element(f)
    local = {name: LocalizedElem.of(f, ring.element(v)) for name, v in (env or {}).items()}
    return _Checker(ring).check(phi, f, local, certificate)


class _Producer:
    def __init__(self, ring: RingPresentation):
        self.ring = ring

    def certify(
        self, phi: Formula, position: RingElem, env: dict[str, RingElem]
    ) -> ForcingCertificate | None:
        ring = self.ring
        if isinstance(phi, (Top, Bottom, Eq, Rel)):
            if forces(ring, position, phi, env).verdict == Verdict.TRUE:
                return ForcingCertificate()
            return None

        parts = _conjuncts(phi)
        if parts is not None:
            children = [self.certify(p, position, env) for p in parts]
            if any(c is None for c in children):
                return None
            return ForcingCertificate(children=children)

        options = _disjuncts(phi)
        if options is not None:
            labelled = [(j, dict(env)) for j in range(len(options))]
            targets = options
        elif isinstance(phi, Exists):
            if not ring.is_finite:
                raise UnsupportedRingError(
                    "Existential witnesses are searched over finite rings only", ring=ring.spec
                )
            labelled = [(0, {**env, phi.var: a}) for a in ring.elements()]
            targets = [phi.body] * len(labelled)
        else:
            raise ForcingCertificateError(f"No certificate structure for {format_formula(phi)}")

        generators: list[RingElem] = []
        labels: list[int] = []
        for k, (choice, branch_env) in enumerate(labelled):
            truth = truth_open(ring, targets[k], branch_env)
            if not truth.known:
                return None
            generators.extend(truth.value.generators)
            labels.extend([k] * len(truth.value.generators))

        membership = radical_membership(ring, Ideal(ring, generators), position)
        if membership is None:
            return None

        parts_g: list[RingElem] = []
        branches: list[BranchCertificate] = []
        for term in membership.cofactors:
            k = labels[term.index]
            g = term.cofactor * generators[term.index]
            choice, branch_env = labelled[k]
            sub = self.certify(targets[k], position * g, branch_env)
            if sub is None:
                return None
            witness = None
            if isinstance(phi, Exists):
                witness = Witness(numerator=branch_env[phi.var])
            parts_g.append(g)
            branches.append(BranchCertificate(choice=choice, witness=witness, certificate=sub))
        partition = Partition(exponent=membership.exponent + 1, parts=parts_g)
        return ForcingCertificate(partition=partition, branches=branches)


def certify_forcing(
    ring: RingPresentation,
    f: RingElem,
    phi: Formula,
    env: dict[str, RingElem] | None = None,
) -> ForcingCertificate | None:
    """Build a forcing certificate for a geometric formula, or None if f does not force it.

    Partitions come from radical-membership certificates: f^n = sum u_k h_k
    with h_k a generator of a branch's truth open gives f^(n+1) = sum f*(u_k h_k).
    Existential witnesses are searched over the carrier of a finite ring.
    """
    f = ring.element(f)
    env = {k: ring.element(v) for k, v in (env or {}).items()}
    certificate = _Producer(ring).certify(phi, f, env)
    if certificate is not None and not check_forcing_certificate(ring, f, phi, env, certificate):
        raise ForcingCertificateError(f"Produced certificate for {format_formula(phi)} does not verify")
    return certificate


# ----------------------------------------------------------------------
# structured text form


def certificate_to_record(cert: ForcingCertificate) -> dict[str, Any]:
    record: dict[str, Any] = {}
    if cert.partition is not None:
        record["partition"] = {
            "exponent": cert.partition.exponent,
            "parts": [str(g) for g in cert.partition.parts],
        }
        record["branches"] = [
            {
                "choice": b.choice,
                **(
                    {"witness": [str(b.witness.numerator), b.witness.exponent]}
                    if b.witness
                    else {}
                ),
                "certificate": certificate_to_record(b.certificate),
            }
            for b in cert.branches
        ]
    if cert.children:
        record["children"] = [certificate_to_record(c) for c in cert.children]
    return record


def certificate_from_record(ring: RingPresentation, record: dict[str, Any] | None) -> ForcingCertificate:
    record = record or {}
    partition = None
    branches: list[BranchCertificate] = []
    if "partition" in record:
        raw = record["partition"]
        partition = Partition(
            exponent=int(raw["exponent"]),
            parts=[ring.parse_element(str(g)) for g in raw.get("parts", [])],
        )
        for b in record.get("branches", []):
            witness = None
            if "witness" in b:
                numerator, exponent = b["witness"]
                witness = Witness(numerator=ring.parse_element(str(numerator)), exponent=int(exponent))
            branches.append(
                BranchCertificate(
                    choice=int(b.get("choice", 0)),
                    witness=witness,
                    certificate=certificate_from_record(ring, b.get("certificate")),
                )
            )
    children = [certificate_from_record(ring, c) for c in record.get("children", [])]
    return ForcingCertificate(partition=partition, branches=branches, children=children)
