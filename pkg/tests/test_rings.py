from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from genalg.errors import DivisionByZero, ImpossibleInverse, MixedParents, NotInvertible
from genalg.poly.dense import PolynomialRing
from genalg.rings import (
    QQ,
    ZZ,
    FiniteField,
    FractionField,
    IntegerModRing,
    ResidueRing,
    RingKind,
    add_assign,
    intern,
    make_ring,
    mul_into,
)

ints = st.integers(-10**6, 10**6)


def test_handles_are_structurally_equal_and_interned():
    assert IntegerModRing(7) == IntegerModRing(7)
    assert IntegerModRing(7) != IntegerModRing(11)
    assert intern(IntegerModRing(7)) is intern(IntegerModRing(7))
    assert make_ring(RingKind.INTEGER_RESIDUE, n=7) is make_ring("IntegerResidue", n=7)
    P1 = PolynomialRing(QQ, "x")
    assert P1 == PolynomialRing(QQ, "x")
    assert P1 != PolynomialRing(QQ, "y")


def test_small_modular_examples():
    Z7 = IntegerModRing(7)
    assert Z7(3) + Z7(5) == Z7(1)
    assert Z7(3).inverse() == Z7(5)
    with pytest.raises(ImpossibleInverse) as info:
        IntegerModRing(6)(2).inverse()
    assert info.value.witness == 2


def test_integer_units_and_division():
    assert ZZ(-1).inverse() == ZZ(-1)
    with pytest.raises(NotInvertible):
        ZZ(2).inverse()
    with pytest.raises(DivisionByZero):
        QQ(0).inverse()
    assert ZZ(12) / ZZ(4) == ZZ(3)


def test_mixed_parents_rejected():
    with pytest.raises(MixedParents):
        IntegerModRing(7)(1) + IntegerModRing(5)(1)
    assert IntegerModRing(7)(1) != IntegerModRing(5)(1)


def test_coercion_up_the_tower():
    P = PolynomialRing(ZZ, "x")
    Q = PolynomialRing(P, "y")
    x = P.gen()
    y = Q.gen()
    assert (y + x + 1) - y == Q(x + 1)
    assert QQ(ZZ(3)) == QQ(Fraction(3))


def test_finite_field_basics():
    F = FiniteField(17, 11)
    g = F.gen()
    assert g * g.inverse() == F.one()
    assert F(17) == F.zero()
    assert F.order() == 17**11
    # Frobenius is an automorphism of order k
    assert g ** (17**11) == g


def test_residue_ring_of_non_field_flags_zero_divisors():
    F = FiniteField(17, 3)
    S = PolynomialRing(F, "y")
    T = ResidueRing(S, S.parse("y^2 - 1"))
    u = T(S.parse("y - 1"))
    with pytest.raises(ImpossibleInverse):
        u.inverse()


def test_fraction_field_canonical_form():
    P = PolynomialRing(ZZ, "t")
    F = FractionField(P)
    t = F(P.gen())
    a = (t * t - 1) / (t - 1)
    assert a == t + 1


def test_parse_and_print_roundtrip():
    P = PolynomialRing(QQ, "x")
    f = P.parse("3*x^3 - x/2 + 7")
    assert P.parse(str(f)) == f


def test_mutation_helpers():
    acc = QQ(0)
    add_assign(acc, QQ(3))
    add_assign(acc, QQ(Fraction(1, 2)))
    assert acc == QQ(Fraction(7, 2))
    dst = ZZ(0)
    mul_into(dst, ZZ(6), ZZ(7))
    assert dst == ZZ(42)
    with pytest.raises(MixedParents):
        add_assign(ZZ(0), QQ(1))


@given(ints, ints, ints)
def test_integer_ring_axioms(a, b, c):
    A, B, C = ZZ(a), ZZ(b), ZZ(c)
    assert (A + B) * C == A * C + B * C
    assert A * B == B * A
    assert (A - B) + B == A


@given(st.integers(2, 60), ints, ints)
def test_mod_ring_matches_int_arithmetic(n, a, b):
    R = IntegerModRing(n)
    assert R(a) * R(b) == R(a * b % n)
    assert R(a) - R(b) == R((a - b) % n)


@given(st.lists(st.integers(0, 16), min_size=3, max_size=3), st.lists(st.integers(0, 16), min_size=3, max_size=3))
def test_gf17_cubed_field_axioms(u, v):
    F = FiniteField(17, 3)
    a, b = F(u), F(v)
    assert a * b == b * a
    if not b.is_zero():
        assert (a * b) * b.inverse() == a
