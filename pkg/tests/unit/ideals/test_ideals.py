"""Tests for ideal membership, quotients and certificate records."""

import pytest

from config.settings import settings
from src.ideals import (
    CertificateRecord,
    Ideal,
    annihilator_saturation,
    ideal_membership,
    ideal_quotient,
    ideals_equal,
    principal_generator,
    radical_membership,
    verify_membership,
)
from src.ideals.models import CofactorTerm, MembershipCertificate
from src.rings import SearchBudgetError, make_ring


class TestPrincipal:
    """Tests for gcd generators of ideals of Z and Z/n."""

    def test_bezout_expression(self, z12):
        """Test the generator is the stated combination of the generators."""
        ideal = Ideal(z12, [8, 6])
        d, coeffs = principal_generator(ideal)
        assert d == 2
        total = sum((z12.element(c) * g for c, g in zip(coeffs, ideal.generators)), z12.zero)
        assert total == d

    def test_zero_ideal_of_modular_ring(self, z6):
        """Test the zero ideal of Z/n is reported as (n)."""
        d, _ = principal_generator(Ideal.zero(z6))
        assert d == 6

    def test_integers(self, integers):
        """Test gcd over Z."""
        d, _ = principal_generator(Ideal(integers, [12, 18]))
        assert d == 6


class TestMembership:
    """Tests for ideal and radical membership certificates."""

    def test_ideal_membership(self, z12):
        """Test 4 lies in (8, 6) of Z/12 with a verifying certificate."""
        ideal = Ideal(z12, [8, 6])
        certificate = ideal_membership(z12, ideal, z12.element(4))
        assert certificate is not None
        assert certificate.exponent == 1
        assert verify_membership(z12, ideal, z12.element(4), certificate)

    def test_radical_membership_needs_power(self, z12):
        """Test 6 is in sqrt((0)) of Z/12 but not in (0)."""
        zero = Ideal.zero(z12)
        assert ideal_membership(z12, zero, z12.element(6)) is None
        certificate = radical_membership(z12, zero, z12.element(6))
        assert certificate is not None
        assert certificate.exponent == 2

    def test_unit_in_coprime_ideal(self, z6):
        """Test 1 is in sqrt((2, 3)) of Z/6."""
        ideal = Ideal(z6, [2, 3])
        certificate = radical_membership(z6, ideal, z6.one)
        assert certificate is not None
        assert verify_membership(z6, ideal, z6.one, certificate)
        assert certificate.describe(ideal).startswith("1^1 = ")

    def test_not_a_member(self, integers):
        """Test 3 is not in sqrt((2)) of Z."""
        assert radical_membership(integers, Ideal(integers, [2]), integers.element(3)) is None
        assert radical_membership(integers, Ideal(integers, [8]), integers.element(6)) is not None

    def test_exponent_cap_below_bound_fails_loudly(self, integers, mocker):
        """Test a truncated exponent search raises instead of reporting non-membership."""
        mocker.patch.object(settings.search, "exponent_cap", 1)
        with pytest.raises(SearchBudgetError):
            radical_membership(integers, Ideal(integers, [4]), integers.element(2))
        z8 = make_ring("Z/8")
        with pytest.raises(SearchBudgetError):
            radical_membership(z8, Ideal.zero(z8), z8.element(2))
        assert radical_membership(integers, Ideal(integers, [4]), integers.element(4)) is not None

    def test_polynomial_radical_membership(self, poly_ring):
        """Test x is in sqrt((y)) when x^2 = y."""
        ideal = Ideal(poly_ring, [poly_ring.parse_element("y")])
        x = poly_ring.parse_element("x")
        certificate = radical_membership(poly_ring, ideal, x)
        assert certificate is not None
        assert verify_membership(poly_ring, ideal, x, certificate)

    def test_tampered_certificate(self, z6):
        """Test a wrong cofactor fails verification."""
        ideal = Ideal(z6, [2, 3])
        forged = MembershipCertificate(
            element=z6.one,
            exponent=1,
            cofactors=[CofactorTerm(cofactor=z6.element(1), index=0)],
        )
        assert not verify_membership(z6, ideal, z6.one, forged)

    def test_out_of_range_index(self, z6):
        """Test a cofactor pointing past the generators fails verification."""
        forged = MembershipCertificate(
            element=z6.element(2),
            exponent=1,
            cofactors=[CofactorTerm(cofactor=z6.one, index=3)],
        )
        assert not verify_membership(z6, Ideal(z6, [2]), z6.element(2), forged)

    def test_record_round_trip(self, z6):
        """Test a record restores to a certificate that still verifies."""
        ideal = Ideal(z6, [2, 3])
        certificate = radical_membership(z6, ideal, z6.element(5))
        record = CertificateRecord(**certificate.to_record(ideal).model_dump())
        ring, restored_ideal, restored = record.restore()
        assert ring == z6
        assert verify_membership(ring, restored_ideal, restored.element, restored)


class TestQuotients:
    """Tests for ideal quotients and annihilator saturation."""

    def test_annihilator_in_modular_ring(self, z6):
        """Test (0 : 2) = (3) in Z/6."""
        quotient = ideal_quotient(z6, Ideal.zero(z6), Ideal(z6, [2]))
        assert ideals_equal(z6, quotient, Ideal(z6, [3]))

    def test_quotient_by_zero_is_unit(self, integers):
        """Test (I : 0) is the unit ideal."""
        quotient = ideal_quotient(integers, Ideal(integers, [4]), Ideal.zero(integers))
        assert ideals_equal(integers, quotient, Ideal.unit(integers))

    def test_regular_element(self, integers):
        """Test (0 : 5) = 0 in Z."""
        quotient = ideal_quotient(integers, Ideal.zero(integers), Ideal(integers, [5]))
        assert ideals_equal(integers, quotient, Ideal.zero(integers))

    def test_polynomial_quotient(self):
        """Test (0 : x) = (y) in Q[x,y]/(x*y)."""
        ring = make_ring("Q[x,y]/(x*y)")
        quotient = ideal_quotient(ring, Ideal.zero(ring), Ideal(ring, [ring.parse_element("x")]))
        assert ideals_equal(ring, quotient, Ideal(ring, [ring.parse_element("y")]))

    def test_saturation_stabilizes(self, z12):
        """Test (0 : 2^inf) = (3) in Z/12 while (0 : 2) = (6)."""
        result = annihilator_saturation(z12, z12.element(2))
        assert ideals_equal(z12, result.annihilator, Ideal(z12, [6]))
        assert ideals_equal(z12, result.saturation, Ideal(z12, [3]))
