import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genalg.errors import DivisionByZero, IndexDivisor
from genalg.ideals import (
    Order,
    TwoGenIdeal,
    basis_product_hnf,
    extend_S,
    hnf_basis,
    hnf_mod,
    hnf_oracle,
    ideal_inverse,
    ideal_mul,
    ideal_norm,
    ideal_pow,
    is_normal,
    make_normal,
    order_denominator,
    prime_decomposition,
    small_prime_ideals,
    unit_ideal,
    valuation,
)
from genalg.numberfield import NumberField
from genalg.prng import SplitMix64
from genalg.rings import intern

K = intern(NumberField("x^2 + 1", "i"))
O = Order(K, is_maximal=True)
i = K.gen()
A = TwoGenIdeal(O, 2, 1 + i)

# x^8 + 2 is Eisenstein at 2 and its discriminant is a power of 2, so
# the equation order is maximal
L = intern(NumberField([2] + [0] * 7 + [1], "x"))
OL = Order(L, is_maximal=True)
PRIMES = small_prime_ideals(OL, 200)

products = st.lists(st.sampled_from(PRIMES), min_size=1, max_size=4)


def product(ps):
    out = ps[0]
    for P in ps[1:]:
        out = out * P
    return out


def diag(n, k):
    return [[k * int(r == c) for c in range(n)] for r in range(n)]


def test_order_denominator_examples():
    assert order_denominator(K.one(), O) == 1
    assert order_denominator(1 + i, O) == 2
    assert order_denominator(K(7), O) == 7
    with pytest.raises(DivisionByZero):
        order_denominator(K.zero(), O)


def test_normality_examples():
    assert is_normal(2, 1 + i, order=O)
    assert is_normal(5, K(5), order=O)
    assert is_normal(4, K(12), order=O)
    assert not is_normal(4, K(8), order=O)
    assert A.normal


def test_hnf_examples():
    assert A.hnf() == [[2, 0], [1, 1]]
    assert hnf_basis(unit_ideal(O)) == diag(2, 1)
    assert make_normal(O, basis=A.hnf()).hnf() == A.hnf()
    assert A.norm() == 2
    assert str(A) == "⟨2, i + 1⟩"


def test_make_normal_from_generators():
    B = make_normal(O, gens=[K(6)])
    assert B.normal and B.hnf() == diag(2, 6)
    C = make_normal(O, gens=[K(2), 1 + i])
    assert C.normal and C.hnf() == A.hnf()
    P3 = prime_decomposition(O, 3)[0]
    P5 = prime_decomposition(O, 5)[0]
    H = (P3 * P5).hnf()
    D = make_normal(O, basis=H, rng=SplitMix64(4))
    assert D.normal and D.hnf() == H


def test_extend_keeps_ideal_and_valuations():
    B = extend_S(A, {5})
    assert B.S == {2, 5} and B.normal
    assert B.hnf() == A.hnf()
    assert is_normal(B.a, B.alpha, B.S, O)
    assert extend_S(A, {2}) is A
    for p in (2, 5):
        for P in prime_decomposition(O, p):
            assert valuation(B, P) == valuation(A, P)


def test_products_and_powers():
    assert A * unit_ideal(O) == A
    assert (A * A).hnf() == diag(2, 2)
    assert ideal_pow(A, 4).hnf() == diag(2, 4)
    assert ideal_pow(A, 0) == unit_ideal(O)
    assert ideal_pow(A, 1) is A
    assert ideal_norm(ideal_pow(A, 5), use_cache=False) == 32
    assert ideal_norm(TwoGenIdeal(O, 3, K(3))) == 9


def test_inverse_examples():
    assert ideal_inverse(unit_ideal(O)).denominator == 1
    inv = ideal_inverse(A)
    assert inv.denominator == 2
    assert (A * inv.numerator).hnf() == diag(2, 2)
    m = ideal_inverse(TwoGenIdeal(O, 7, K(7)))
    assert m.denominator == 7 and m.numerator.hnf() == diag(2, 1)


def test_prime_decomposition_in_gaussian_integers():
    (P2,) = prime_decomposition(O, 2)
    assert (P2.residue_degree, P2.ramification, P2.norm()) == (1, 2, 2)
    (P3,) = prime_decomposition(O, 3)
    assert (P3.residue_degree, P3.norm()) == (2, 9)
    P5 = prime_decomposition(O, 5)
    assert len(P5) == 2 and all(P.norm() == 5 for P in P5)
    assert P5[0] != P5[1]
    assert P5[0] * P5[1] == TwoGenIdeal(O, 5, K(5))


def test_prime_decomposition_against_root_search():
    for p in (7, 11, 13, 17, 29, 97):
        roots = [r for r in range(p) if (r * r + 1) % p == 0]
        dec = prime_decomposition(O, p)
        if roots:
            assert len(dec) == 2 and all(P.residue_degree == 1 for P in dec)
        else:
            assert len(dec) == 1 and dec[0].residue_degree == 2


def test_index_divisor_guard():
    M = intern(NumberField("x^2 + 3", "w"))
    with pytest.raises(IndexDivisor):
        prime_decomposition(Order(M), 2)


def test_valuation_examples():
    (P2,) = prime_decomposition(O, 2)
    assert valuation(K.one(), P2) == 0
    assert valuation(K(2), P2) == 2
    assert valuation(ideal_pow(A, 3), P2) == 3
    with pytest.raises(DivisionByZero):
        valuation(K.zero(), P2)


def test_hnf_routines_agree():
    rng = SplitMix64(17)
    for _ in range(30):
        rows = [[rng.randint(-50, 50) for _ in range(4)] for _ in range(6)]
        D = 2**rng.randint(1, 5) * 3**rng.randint(0, 3)
        assert hnf_mod(rows, D, 4) == hnf_oracle(rows, D, 4)


def test_product_of_twenty_in_shuffled_orders():
    rng = SplitMix64(3)
    ps = [rng.choice(PRIMES) for _ in range(20)]
    H = product(ps).hnf()
    for _ in range(3):
        rng.shuffle(ps)
        assert product(ps).hnf() == H


@settings(max_examples=40)
@given(products, products)
def test_product_matches_basis_oracle(xs, ys):
    X, Y = product(xs), product(ys)
    Z = ideal_mul(X, Y)
    assert Z.normal and is_normal(Z.a, Z.alpha, Z.S, OL)
    assert Z.hnf() == basis_product_hnf(OL, X.hnf(), Y.hnf())
    assert Z == Y * X
    assert ideal_norm(Z, use_cache=False) == ideal_norm(X) * ideal_norm(Y)
    H = Z.hnf()
    det = 1
    for r in range(len(H)):
        det *= H[r][r]
    assert det == ideal_norm(Z, use_cache=False)


@settings(max_examples=40)
@given(products)
def test_inverse_and_valuations(xs):
    X = product(xs)
    inv = ideal_inverse(X)
    assert (X * inv.numerator).hnf() == diag(OL.n, inv.denominator)
    for P in set(xs):
        assert valuation(X, P) == xs.count(P)


@settings(max_examples=20)
@given(products, st.integers(0, 4))
def test_power_norm(xs, k):
    X = product(xs)
    Xk = ideal_pow(X, k)
    assert ideal_norm(Xk, use_cache=False) == ideal_norm(X) ** k
    expected = product([X] * k) if k else unit_ideal(OL)
    assert Xk == expected
