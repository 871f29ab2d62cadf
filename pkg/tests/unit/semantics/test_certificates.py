"""Tests for forcing certificates."""

import pytest

from config.settings import settings
from src.logic import parse_formula
from src.rings import make_ring
from src.semantics import (
    BranchCertificate,
    ForcingCertificate,
    ForcingCertificateError,
    Partition,
    certificate_from_record,
    certificate_to_record,
    certify_forcing,
    check_forcing_certificate,
    verify_partition,
)


class TestCertifyForcing:
    """Tests for producing and checking forcing certificates."""

    def test_disjunction(self, z6):
        """Test 1 |= D(2) | D(3) in Z/6 has a verifying partition certificate."""
        phi = parse_formula("D(2) | D(3)")
        certificate = certify_forcing(z6, z6.one, phi)
        assert certificate is not None
        assert certificate.partition is not None
        assert verify_partition(z6, z6.one, certificate.partition)
        assert check_forcing_certificate(z6, z6.one, phi, {}, certificate)

    def test_existential_witnesses(self, z6):
        """Test 2 |= exists y. 2*y = 1 with witnesses taken from the carrier."""
        phi = parse_formula("exists y. 2*y = 1")
        certificate = certify_forcing(z6, z6.element(2), phi)
        assert certificate is not None
        assert all(branch.witness is not None for branch in certificate.branches)
        assert check_forcing_certificate(z6, z6.element(2), phi, {}, certificate)

    def test_not_forced(self, z6):
        """Test no certificate exists when f does not force phi."""
        assert certify_forcing(z6, z6.one, parse_formula("D(2)")) is None

    def test_conjunction_children(self, z12):
        """Test conjunctions certify each conjunct."""
        phi = parse_formula("D(5) & (D(2) | D(3))")
        certificate = certify_forcing(z12, z12.one, phi)
        assert len(certificate.children) == 2
        assert check_forcing_certificate(z12, z12.one, phi, {}, certificate)

    def test_free_variable(self, z6):
        """Test certificates respect the environment."""
        phi = parse_formula("x = 0 | exists y. x*y = 1", variables=("x",))
        for x in z6.elements():
            env = {"x": x}
            certificate = certify_forcing(z6, z6.one, phi, env)
            assert certificate is not None
            assert check_forcing_certificate(z6, z6.one, phi, env, certificate)

    def test_record_round_trip(self, z6):
        """Test a certificate survives its structured text form."""
        phi = parse_formula("exists y. 2*y = 1")
        certificate = certify_forcing(z6, z6.element(2), phi)
        restored = certificate_from_record(z6, certificate_to_record(certificate))
        assert check_forcing_certificate(z6, z6.element(2), phi, {}, restored)


class TestCheckForcingCertificate:
    """Tests for rejection of bad certificates."""

    def test_wrong_partition(self, z6):
        """Test a partition that does not sum to a power of f is rejected."""
        phi = parse_formula("D(2) | D(3)")
        forged = ForcingCertificate(
            partition=Partition(exponent=1, parts=[z6.element(2)]),
            branches=[BranchCertificate(choice=0, certificate=ForcingCertificate())],
        )
        assert not check_forcing_certificate(z6, z6.one, phi, {}, forged)

    def test_wrong_branch(self, z6):
        """Test choosing the wrong disjunct on a branch is rejected."""
        phi = parse_formula("D(2) | D(3)")
        certificate = certify_forcing(z6, z6.one, phi)
        record = certificate_to_record(certificate)
        for branch in record["branches"]:
            branch["choice"] = 1 - branch["choice"]
        assert not check_forcing_certificate(z6, z6.one, phi, {}, certificate_from_record(z6, record))

    def test_shape_mismatch(self, z6):
        """Test a disjunction without a partition is a shape error."""
        with pytest.raises(ForcingCertificateError):
            check_forcing_certificate(z6, z6.one, parse_formula("D(2) | D(3)"), {}, ForcingCertificate())

    def test_positive_atom_needs_no_data(self):
        """Test atoms are decided directly at the position."""
        ring = make_ring("Z/10")
        assert check_forcing_certificate(ring, ring.element(2), parse_formula("D(4)"), {}, ForcingCertificate())
        assert not check_forcing_certificate(ring, ring.element(2), parse_formula("D(5)"), {}, ForcingCertificate())

    def test_partition_limit(self, z6, mocker):
        """Test partitions above the configured summand limit are refused."""
        phi = parse_formula("D(2) | D(3)")
        certificate = certify_forcing(z6, z6.one, phi)
        mocker.patch.object(settings.oracle, "partition_summand_limit", 1)
        with pytest.raises(ForcingCertificateError):
            check_forcing_certificate(z6, z6.one, phi, {}, certificate)
