"""Tests for the frame of radical ideals."""

from itertools import chain, combinations, product

import pytest

from src.frame import (
    Open,
    all_opens,
    basic_open,
    equal,
    heyting,
    is_dense,
    is_trivial_frame,
    join,
    join_all,
    leq,
    meet,
    meet_all,
    negation,
    verify_leq,
)
from src.rings import MixedRingError, UnsupportedRingError, make_ring


class TestOrder:
    """Tests for leq and its certificates."""

    def test_unit_below_coprime_join(self, z6):
        """Test D(1) <= D(2, 3) in Z/6 with a verifying certificate."""
        u = Open.generated_by(z6, [1])
        v = Open.generated_by(z6, [2, 3])
        certificate = leq(u, v)
        assert certificate is not None
        assert verify_leq(certificate)
        assert len(certificate.describe()) == 1

    def test_not_below(self, z6):
        """Test D(2) is not below D(3)."""
        assert leq(basic_open(z6, 2), basic_open(z6, 3)) is None

    def test_radical_invariance(self, z12):
        """Test D(2) = D(4) = D(8) in Z/12."""
        assert equal(basic_open(z12, 2), basic_open(z12, 4))
        assert equal(basic_open(z12, 8), basic_open(z12, 2))
        assert not equal(basic_open(z12, 2), basic_open(z12, 3))

    def test_nilpotent_is_bottom(self, z12):
        """Test D(6) is the bottom open of Z/12."""
        assert equal(basic_open(z12, 6), Open.bottom(z12))

    def test_mixed_rings(self, z6, z4):
        """Test opens of different rings cannot be compared."""
        with pytest.raises(MixedRingError):
            leq(Open.top(z6), Open.top(z4))

    def test_empty_open_is_bottom(self, integers):
        """Test the empty generator list is below everything."""
        certificate = leq(Open.generated_by(integers, []), Open.bottom(integers))
        assert certificate is not None
        assert certificate.certificates == []


class TestLattice:
    """Tests for meet, join and the Heyting implication."""

    def test_meet_and_join(self, z6):
        """Test D(2) & D(3) = bottom and D(2) | D(3) = top in Z/6."""
        two, three = basic_open(z6, 2), basic_open(z6, 3)
        assert equal(meet(two, three), Open.bottom(z6))
        assert equal(join(two, three), Open.top(z6))

    def test_heyting_adjunction(self, z12):
        """Test W & U <= V iff W <= (U => V) over every triple of opens of Z/12."""
        opens = all_opens(z12)
        for u in opens:
            for v in opens:
                implication = heyting(u, v)
                for w in opens:
                    below_meet = leq(meet(w, u), v) is not None
                    below_implication = leq(w, implication) is not None
                    assert below_meet == below_implication

    def test_negation(self, z6):
        """Test not D(2) = D(3) in Z/6."""
        assert equal(negation(basic_open(z6, 2)), basic_open(z6, 3))

    def test_dense(self, integers):
        """Test D(2) is dense in Z."""
        assert is_dense(basic_open(integers, 2))
        assert not is_dense(Open.bottom(integers))

    def test_all_opens(self, z12):
        """Test Rad(Z/12) has one open per squarefree divisor."""
        assert len(all_opens(z12)) == 4

    def test_all_opens_needs_finite_ring(self, integers):
        """Test Z has no finite frame."""
        with pytest.raises(UnsupportedRingError):
            all_opens(integers)

    def test_trivial_frame(self):
        """Test top <= bottom only in the trivial ring."""
        assert is_trivial_frame(make_ring("Z/1"))
        assert not is_trivial_frame(make_ring("Z/2"))

    def test_polynomial_heyting_needs_radical(self, poly_ring):
        """Test polynomial Heyting implication requires a radical consequent."""
        u = basic_open(poly_ring, poly_ring.parse_element("x"))
        with pytest.raises(UnsupportedRingError):
            heyting(u, Open.bottom(poly_ring))


def frame_law_failures(n: int) -> list[str]:
    """Lattice and frame laws that fail somewhere in Rad(Z/n)."""
    ring = make_ring(f"Z/{n}")
    opens = all_opens(ring)
    top, bottom = Open.top(ring), Open.bottom(ring)
    failures = []

    for u in opens:
        if not (equal(join(u, bottom), u) and equal(meet(u, top), u)):
            failures.append(f"bounds at {u}")
        if not (equal(join(u, u), u) and equal(meet(u, u), u)):
            failures.append(f"idempotence at {u}")

    for u, v in product(opens, repeat=2):
        if not equal(join(u, v), join(v, u)):
            failures.append(f"join commutativity at {u}, {v}")
        if not equal(meet(u, v), meet(v, u)):
            failures.append(f"meet commutativity at {u}, {v}")
        if not equal(join(u, meet(u, v)), u):
            failures.append(f"join absorption at {u}, {v}")
        if not equal(meet(u, join(u, v)), u):
            failures.append(f"meet absorption at {u}, {v}")

    for u, v, w in product(opens, repeat=3):
        if not equal(join(join(u, v), w), join(u, join(v, w))):
            failures.append(f"join associativity at {u}, {v}, {w}")
        if not equal(meet(meet(u, v), w), meet(u, meet(v, w))):
            failures.append(f"meet associativity at {u}, {v}, {w}")

    families = chain.from_iterable(combinations(opens, k) for k in range(len(opens) + 1))
    for family in families:
        joined = join_all(ring, list(family))
        if not equal(meet_all(ring, list(family)), meet_all(ring, [top, *family])):
            failures.append(f"meet_all at {list(map(str, family))}")
        for u in opens:
            spread = join_all(ring, [meet(u, v) for v in family])
            if not equal(meet(u, joined), spread):
                failures.append(f"distributivity at {u} over {list(map(str, family))}")
    return failures


class TestFrameLaws:
    """Tests for the frame laws over every open of Z/n."""

    @pytest.mark.parametrize("n", [1, 2, 4, 6, 12, 30])
    def test_small_moduli(self, n):
        """Test the laws hold on a few representative moduli."""
        assert frame_law_failures(n) == []

    @pytest.mark.slow
    def test_every_modulus_up_to_60(self):
        """Test the lattice and frame laws for every n <= 60."""
        failures = {n: frame_law_failures(n) for n in range(1, 61)}
        assert {n: f for n, f in failures.items() if f} == {}

    def test_opens_are_squarefree_divisors(self):
        """Test all_opens lists pairwise distinct opens, bottom and top included."""
        for n in range(1, 61):
            ring = make_ring(f"Z/{n}")
            opens = all_opens(ring)
            assert any(equal(u, Open.top(ring)) for u in opens)
            assert any(equal(u, Open.bottom(ring)) for u in opens)
            distinct = [(u, v) for u, v in combinations(opens, 2) if equal(u, v)]
            assert distinct == [] or n == 1
