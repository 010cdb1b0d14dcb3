import pytest
from hypothesis import given
from hypothesis import strategies as st

from genalg.errors import DivisionByZero, ImpossibleInverse
from genalg.poly.dense import (
    PolynomialRing,
    resultant,
    resultant_subresultant,
    resultant_sylvester,
)
from genalg.rings import QQ, ZZ, FiniteField, IntegerModRing, intern

ZX = intern(PolynomialRing(ZZ, "x"))
QX = intern(PolynomialRing(QQ, "x"))

monic = st.lists(st.integers(-20, 20), min_size=1, max_size=5).map(lambda c: ZX.from_coeffs(c + [1]))


def test_resultant_small_cases():
    assert resultant(ZX.parse("x^2+1"), ZX.parse("x^2-1")) == ZZ(4)
    assert resultant(ZX.parse("(x-1)*(x+3)"), ZX.parse("(x-1)*(2*x+5)")) == ZZ(0)
    assert resultant(ZX.zero(), ZX.zero()) == ZZ(0)
    assert resultant(ZX(3), ZX.parse("x^2+x")) == ZZ(9)


def test_resultant_falls_back_on_zero_divisors():
    R = intern(IntegerModRing(6))
    P = intern(PolynomialRing(R, "x"))
    f, g = P.parse("x^3+2*x+1"), P.parse("2*x^2+3*x+1")
    with pytest.raises(ImpossibleInverse):
        resultant_subresultant(f, g)
    integer = resultant(ZX.parse("x^3+2*x+1"), ZX.parse("2*x^2+3*x+1"))
    assert resultant(f, g) == resultant_sylvester(f, g) == R(integer.value)


def test_resultant_over_finite_field_matches_sylvester():
    F = intern(FiniteField(17, 3, "a"))
    P = intern(PolynomialRing(F, "y"))
    f = P.parse("a*y^4 + (a^2+1)*y + 3")
    g = P.parse("y^3 + a*y^2 + 5*a")
    assert resultant(f, g) == resultant_sylvester(f, g)


@given(monic, monic)
def test_resultant_antisymmetry(f, g):
    sign = -1 if (f.degree() * g.degree()) & 1 else 1
    assert resultant(f, g) == sign * resultant(g, f)
    assert resultant(f, g) == resultant_sylvester(f, g)


@given(monic, monic, monic)
def test_resultant_multiplicative(f, g, h):
    assert resultant(f, g * h) == resultant(f, g) * resultant(f, h)


@given(st.lists(st.integers(-9, 9), max_size=6), st.lists(st.integers(-9, 9), min_size=1, max_size=4))
def test_divrem_and_pseudo_divrem(a, b):
    f, g = QX.from_coeffs(a), QX.from_coeffs(b)
    if g.is_zero():
        with pytest.raises(DivisionByZero):
            f.divrem(g)
        return
    q, r = f.divrem(g)
    assert q * g + r == f and r.degree() < g.degree()
    F, G = ZX.from_coeffs(a), ZX.from_coeffs(b)
    if G.is_zero() or F.degree() < G.degree():
        return
    q, r = F.pseudo_divrem(G)
    k = F.degree() - G.degree() + 1
    assert G.lc() ** k * F == q * G + r


def test_gcd_normalisation():
    f = ZX.parse("6*x^2 - 6")
    g = ZX.parse("4*x^2 + 8*x + 4")
    assert f.gcd(g) == ZX.parse("2*x + 2")
    assert QX.parse("2*x^2-2").gcd(QX.parse("3*x+3")) == QX.parse("x+1")
