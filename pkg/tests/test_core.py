"""Carrier construction, validation, and the primitive invariants."""

from __future__ import annotations

import pytest

import addcomb as ac
from support import closure_oracle, order_oracle


# ---------------------------------------------------------------------------
# Extended naturals
# ---------------------------------------------------------------------------


def test_extended_nat_ordering():
    zero = ac.ExtendedNat(0)
    five = ac.ExtendedNat(5)
    assert zero < five < ac.INFINITY
    assert five <= ac.ExtendedNat(5) <= five
    assert ac.INFINITY == ac.ExtendedNat(None)
    assert not ac.INFINITY < ac.INFINITY
    assert max(zero, ac.INFINITY) == ac.INFINITY
    assert min(five, ac.INFINITY) == five
    # comparisons coerce plain ints
    assert five == 5
    assert five < 6
    assert ac.INFINITY > 10**9


def test_extended_nat_rejects_arithmetic():
    with pytest.raises(TypeError):
        ac.ExtendedNat(2) + ac.ExtendedNat(3)
    with pytest.raises(TypeError):
        1 + ac.INFINITY
    with pytest.raises(TypeError):
        ac.INFINITY - 1


def test_extended_nat_json_round_trip():
    assert ac.ExtendedNat(7).to_json() == 7
    assert ac.INFINITY.to_json() == "infinity"
    for v in (ac.ExtendedNat(0), ac.ExtendedNat(12), ac.INFINITY):
        assert ac.ExtendedNat.from_json(v.to_json()) == v


def test_extended_nat_validation_and_immutability():
    with pytest.raises(ValueError):
        ac.ExtendedNat(-1)
    x = ac.ExtendedNat(3)
    with pytest.raises(AttributeError):
        x.value = 4


# ---------------------------------------------------------------------------
# Element sets
# ---------------------------------------------------------------------------


def test_element_set_parse_and_str():
    s = ac.ElementSet.parse("{0,3,5}", 8)
    assert s.elements() == (0, 3, 5)
    assert str(s) == "{0,3,5}"
    assert ac.ElementSet.parse("0, 3 ,5", 8) == s
    assert ac.ElementSet.parse("{}", 4) == ac.ElementSet.empty(4)
    assert str(ac.ElementSet.empty(4)) == "{}"
    assert ac.ElementSet.parse(str(s), 8) == s


def test_element_set_parse_errors():
    with pytest.raises(ac.ParseError):
        ac.ElementSet.parse("{0,a}", 4)
    with pytest.raises(ac.ParseError):
        ac.ElementSet.parse("{0,1", 4)
    with pytest.raises(ac.IndexOutOfRange):
        ac.ElementSet.parse("{0,4}", 4)
    with pytest.raises(ac.IndexOutOfRange):
        ac.ElementSet.parse("{-1}", 4)


def test_element_set_operations():
    a = ac.ElementSet.of(6, 0, 1, 2)
    b = ac.ElementSet.of(6, 2, 3)
    assert (a | b).elements() == (0, 1, 2, 3)
    assert (a & b).elements() == (2,)
    assert (a - b).elements() == (0, 1)
    assert b <= (a | b)
    assert not (a <= b)
    assert len(a) == 3 and 1 in a and 5 not in a
    assert list(a) == [0, 1, 2]
    assert ac.ElementSet.full(3).elements() == (0, 1, 2)


def test_element_set_carrier_checks():
    with pytest.raises(ValueError):
        ac.ElementSet.of(4, 1) | ac.ElementSet.of(5, 1)
    with pytest.raises(ac.CarrierTooLarge):
        ac.ElementSet.empty(65)
    with pytest.raises(ac.IndexOutOfRange):
        ac.ElementSet.of(4, 9)


# ---------------------------------------------------------------------------
# Table validation
# ---------------------------------------------------------------------------


def test_non_associative_table_rejected_with_witness():
    with pytest.raises(ac.NonAssociative) as exc:
        ac.build_semigroup([[0, 0], [1, 0]])
    # first violating triple in scan order: (1+0)+1 = 0 but 1+(0+1) = 1
    assert exc.value.witness == (1, 0, 1)
    assert "(1+0)+1" in str(exc.value)


def test_malformed_tables_rejected():
    with pytest.raises(ac.ValidationError):
        ac.build_semigroup([])
    with pytest.raises(ac.ValidationError):
        ac.build_semigroup([[0, 1], [1]])
    with pytest.raises(ac.IndexOutOfRange):
        ac.build_semigroup([[0, 1], [1, 2]])
    with pytest.raises(ac.IndexOutOfRange):
        ac.build_semigroup([[True]])
    with pytest.raises(ac.CarrierTooLarge):
        ac.leftzero(65)
    with pytest.raises(ac.CarrierTooLarge):
        ac.product(ac.cyclic(9), ac.cyclic(8))


def test_cancellativity_needs_rows_and_columns():
    # right-zero: every row is a permutation but columns are constant
    rightzero = ac.build_semigroup([[0, 1, 2]] * 3)
    assert not rightzero.is_cancellative
    assert not ac.leftzero(3).is_cancellative
    assert ac.cyclic(5).is_cancellative


def test_identity_units_and_group_flags():
    z6 = ac.cyclic(6)
    assert z6.identity == 0
    assert z6.units == ac.ElementSet.full(6)
    assert z6.is_group and z6.is_commutative

    mc = ac.maxchain(3)
    assert mc.identity == 0
    assert mc.units.elements() == (0,)
    assert not mc.is_group and mc.is_commutative and not mc.is_cancellative

    lz = ac.leftzero(3)
    assert lz.identity is None
    assert lz.units.elements() == ()

    d4 = ac.dihedral(4)
    assert d4.is_group and not d4.is_commutative
    assert d4.inverse(1) == 3  # r * r^3 = e
    assert d4.inverse(5) == 5  # reflections are involutions


def test_unitization():
    mc = ac.maxchain(3)
    assert ac.unitization(mc) is mc  # already unital

    lz = ac.leftzero(2)
    lz1 = ac.unitization(lz)
    assert lz1.n == 3
    assert lz1.identity == 2
    # original products are preserved
    for a in range(2):
        for b in range(2):
            assert lz1.add(a, b) == lz.add(a, b)


# ---------------------------------------------------------------------------
# Orders, closures, constants
# ---------------------------------------------------------------------------


def test_element_order_pins():
    z12 = ac.cyclic(12)
    assert ac.element_order(z12, 0) == ac.ExtendedNat(1)
    assert ac.element_order(z12, 1) == ac.ExtendedNat(12)
    assert ac.element_order(z12, 4) == ac.ExtendedNat(3)
    assert ac.element_order(z12, 6) == ac.ExtendedNat(2)
    q8 = ac.quaternion8()
    assert [ac.element_order(q8, z).value for z in range(8)] == [1, 2, 4, 4, 4, 4, 4, 4]


def test_element_order_matches_oracle_everywhere():
    for A in (ac.cyclic(9), ac.dihedral(4), ac.maxchain(5), ac.leftzero(4)):
        for z in range(A.n):
            assert ac.element_order(A, z).value == order_oracle(A, z)


def test_generated_subsemigroup():
    z6 = ac.cyclic(6)
    assert ac.generated_subsemigroup(z6, ac.ElementSet.of(6, 2, 3)) == ac.ElementSet.full(6)
    assert ac.generated_subsemigroup(z6, ac.ElementSet.of(6, 2)).elements() == (0, 2, 4)
    assert ac.generated_subsemigroup(z6, ac.ElementSet.empty(6)) == ac.ElementSet.empty(6)
    mc = ac.maxchain(4)
    assert ac.generated_subsemigroup(mc, ac.ElementSet.of(4, 2)).elements() == (2,)


def test_generated_subsemigroup_matches_closure_oracle():
    for A in (ac.cyclic(8), ac.dihedral(3), ac.maxchain(4)):
        for mask in range(1 << A.n):
            Z = ac.ElementSet(A.n, mask)
            got = set(ac.generated_subsemigroup(A, Z))
            want = closure_oracle(A, Z.elements()) if mask else set()
            assert got == want


def test_p_constant_pins():
    assert ac.p_constant(ac.cyclic(12)) == ac.ExtendedNat(2)
    assert ac.p_constant(ac.cyclic(7)) == ac.ExtendedNat(7)
    assert ac.p_constant(ac.cyclic(1)) == ac.INFINITY
    assert ac.p_constant(ac.dihedral(4)) == ac.ExtendedNat(2)
    assert ac.p_constant(ac.quaternion8()) == ac.ExtendedNat(2)
    # non-unital input: the constant is taken over the unitization
    assert ac.p_constant(ac.leftzero(2)) == ac.ExtendedNat(1)


def test_centralizer():
    d4 = ac.dihedral(4)
    rot_and_ref = ac.ElementSet.of(8, 1, 4)  # r and s
    assert ac.centralizer(d4, rot_and_ref).elements() == (0, 2)  # the center
    assert ac.centralizer(d4, ac.ElementSet.empty(8)) == ac.ElementSet.full(8)
    z5 = ac.cyclic(5)
    assert ac.centralizer(z5, ac.ElementSet.of(5, 3)) == ac.ElementSet.full(5)


# ---------------------------------------------------------------------------
# Standard constructions
# ---------------------------------------------------------------------------


def test_dihedral_convention():
    d4 = ac.dihedral(4)
    # indices: 0..3 rotations r^i, 4..7 reflections s r^i
    assert d4.add(4, 1) == 5  # s * r = s r
    assert d4.add(1, 4) == 7  # r * s = s r^{-1} = s r^3
    assert d4.add(1, 1) == 2
    assert d4.add(5, 5) == 0  # involution
    for i in range(4, 8):
        assert ac.element_order(d4, i) == ac.ExtendedNat(2)


def test_quaternion_structure():
    q8 = ac.quaternion8()
    # indices 0..7 = 1, -1, i, -i, j, -j, k, -k
    assert q8.add(1, 1) == 0  # (-1)(-1) = 1
    assert q8.add(2, 4) == 6  # i j = k
    assert q8.add(4, 2) == 7  # j i = -k
    assert q8.add(2, 2) == 1  # i^2 = -1
    assert q8.is_group and not q8.is_commutative


def test_product_isomorphic_to_cyclic_by_crt():
    p = ac.product(ac.cyclic(2), ac.cyclic(3))
    z6 = ac.cyclic(6)
    assert p.n == 6 and p.is_group and p.is_commutative
    # explicit isomorphism x mod 6 -> (x mod 2, x mod 3)
    phi = [(x % 2) * 3 + (x % 3) for x in range(6)]
    assert sorted(phi) == list(range(6))
    for a in range(6):
        for b in range(6):
            assert p.add(phi[a], phi[b]) == phi[z6.add(a, b)]


def test_product_non_commutative_factor():
    p = ac.product(ac.cyclic(2), ac.dihedral(3))
    assert p.n == 12 and p.is_group and not p.is_commutative


def test_leftzero_and_maxchain_tables():
    lz = ac.leftzero(3)
    assert all(lz.add(a, b) == a for a in range(3) for b in range(3))
    mc = ac.maxchain(4)
    assert all(mc.add(a, b) == max(a, b) for a in range(4) for b in range(4))
    with pytest.raises(ac.ValidationError):
        ac.cyclic(0)
    with pytest.raises(ac.ValidationError):
        ac.dihedral(0)


# ---------------------------------------------------------------------------
# Cayley text format
# ---------------------------------------------------------------------------


def test_parse_cayley_text_round_trip():
    z3 = ac.cyclic(3)
    text = "3\n" + "\n".join(" ".join(str(v) for v in row) for row in z3.table)
    parsed = ac.parse_cayley_text(text)
    assert parsed.table == z3.table


def test_parse_cayley_text_errors():
    with pytest.raises(ac.ParseError):
        ac.parse_cayley_text("")
    with pytest.raises(ac.ParseError):
        ac.parse_cayley_text("x\n0")
    with pytest.raises(ac.ParseError):
        ac.parse_cayley_text("2\n0 1")
    with pytest.raises(ac.ParseError):
        ac.parse_cayley_text("1\n0 0")
    with pytest.raises(ac.ParseError):
        ac.parse_cayley_text("1\nz")
    with pytest.raises(ac.NonAssociative):
        ac.parse_cayley_text("2\n0 0\n1 0")
