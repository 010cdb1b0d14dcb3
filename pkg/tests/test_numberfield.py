from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import fraction_det

from genalg.errors import DivisionByZero
from genalg.numberfield import (
    NumberField,
    multiplication_matrix,
    nf_inverse,
    nf_mul,
    nf_mul_unreduced,
    nf_norm,
    nf_reduce,
    nf_trace,
)
from genalg.poly.dense import PolynomialRing
from genalg.rings import QQ, intern

K = intern(NumberField("x^3 + 3*x + 1", "a"))
Q2 = intern(NumberField("x^2 - 2", "x"))
QX = intern(PolynomialRing(QQ, "x"))

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
elems = st.lists(fractions, min_size=3, max_size=3).map(K.from_coeffs)


def schoolbook(a, b):
    pa = QX.from_coeffs([QQ(c) for c in a.coeffs()])
    pb = QX.from_coeffs([QQ(c) for c in b.coeffs()])
    r = (pa * pb).divrem(a.parent.defining_poly())[1]
    return a.parent.from_coeffs([c for c in r.coeffs])


def test_small_identities():
    x = Q2.gen()
    assert nf_mul(x, x) == Q2(2)
    assert nf_inverse(x) == x / 2
    assert nf_inverse(Q2.one()) == Q2.one()
    a = K.gen()
    assert nf_trace(K.one()) == 3
    assert nf_trace(a) == 0
    assert nf_norm(K.one()) == 1
    assert nf_norm(a) == -1
    with pytest.raises(DivisionByZero):
        nf_inverse(K.zero())


def test_precomputed_tables():
    f = K.f
    d = K.d
    S = K.newton_sums
    assert S[0] == d
    # Newton's identities with f = x^d + c_{d-1} x^{d-1} + ... + c_0
    c = {d - i: f[d - i] for i in range(d + 1)}
    for k in range(1, d + 1):
        total = sum(c[d - i] * S[k - i] for i in range(1, k)) + S[k] + k * c[d - k]
        assert total == 0
    x = K.gen()
    p = x ** (d - 1)
    for row in K.power_table:
        p = p * x
        assert p == K.from_coeffs(list(row))


@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert nf_mul(a, b) == schoolbook(a, b)


@given(elems, elems)
def test_trace_and_norm(a, b):
    assert nf_trace(a + b) == nf_trace(a) + nf_trace(b)
    assert nf_norm(a * b) == nf_norm(a) * nf_norm(b)
    M = multiplication_matrix(a)
    assert nf_trace(a) == sum(M[i][i] for i in range(K.d))
    assert nf_norm(a) == fraction_det(M)


@given(elems)
def test_inverse_round_trip(a):
    if a.is_zero():
        return
    assert a * nf_inverse(a) == K.one()


@given(st.lists(st.tuples(elems, elems), max_size=12))
def test_delayed_reduction_dot_product(pairs):
    acc = nf_mul_unreduced(K.zero(), K.zero())
    assert len(acc.num) == 2 * K.d - 1
    eager = K.zero()
    for a, b in pairs:
        acc.add_assign(nf_mul_unreduced(a, b))
        eager = eager + nf_mul(a, b)
    assert nf_reduce(acc) == eager


def test_long_dot_product():
    L = 100
    xs = [K.from_coeffs([Fraction(i, 3), -i, 7]) for i in range(L)]
    ys = [K.from_coeffs([1, Fraction(i, 5), i * i]) for i in range(L)]
    acc = nf_mul_unreduced(K.zero(), K.zero())
    for a, b in zip(xs, ys):
        acc.add_product(a, b)
    eager = K.zero()
    for a, b in zip(xs, ys):
        eager += a * b
    assert nf_reduce(acc) == eager == K._dot(xs, ys)


def test_inverse_in_degree_sixteen():
    L = intern(NumberField([2] + [0] * 15 + [1], "x"))
    a = L.from_ints([1, 2, 0, 0, 3] + [0] * 10 + [-1])
    assert a * nf_inverse(a) == L.one()


def test_print_and_parse():
    a = K.parse("a^2 + a + 1")
    assert str(a) == "a^2 + a + 1"
    assert K.parse(str(a / 3 - 2)) == a / 3 - 2
