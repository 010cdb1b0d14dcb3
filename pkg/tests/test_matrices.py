import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import cofactor_det, fraction_matrix_minpoly, leibniz_det, poly_at_matrix

from genalg.errors import NonSquare
from genalg.matrices import (
    DivisionStats,
    MatrixSpace,
    charpoly_berkowitz,
    charpoly_danilevsky_ff,
    charpoly_hessenberg,
    companion_matrix,
    det,
    det_berkowitz,
    det_clow,
    det_interpolation,
    fflu,
    matrix_from_json,
    matrix_to_json,
    minpoly_field,
    minpoly_integer,
)
from genalg.poly.dense import PolynomialRing
from genalg.poly.sparse import MPolyRing
from genalg.prng import SplitMix64
from genalg.rings import QQ, ZZ, IntegerModRing, intern

ZT = intern(PolynomialRing(ZZ, "T"))


def int_matrix(rows, R=ZZ):
    return MatrixSpace(R, len(rows), len(rows[0])).from_rows([[R(x) for x in r] for r in rows])


def random_rows(rng, n, b=99):
    return [[rng.randint(-b, b) for _ in range(n)] for _ in range(n)]


square = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-30, 30), min_size=n, max_size=n), min_size=n, max_size=n)
)


def test_identity_determinants():
    for n in range(1, 9):
        I = MatrixSpace(ZZ, n, n).identity()
        assert det(I) == ZZ(1) and det_clow(I) == ZZ(1)
    r = fflu(MatrixSpace(ZZ, 3, 3).identity())
    assert r.rank == 3 and r.det_value == ZZ(1)


def test_symbolic_two_by_two():
    P = intern(MPolyRing(ZZ, ("a", "b", "c", "d")))
    a, b, c, d = P.gens()
    M = MatrixSpace(P, 2, 2).from_rows([[a, b], [c, d]])
    assert fflu(M).det_value == a * d - b * c
    assert det_clow(M) == a * d - b * c


def test_fflu_rank_of_singular_and_rectangular():
    r = fflu(int_matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]]))
    assert r.rank == 2 and r.det_value == ZZ(0)
    assert fflu(int_matrix([[1, 2, 3], [4, 5, 6]])).rank == 2


def test_det_rejects_non_square():
    with pytest.raises(NonSquare):
        det(int_matrix([[1, 2]]))


def test_zero_divisor_pivots_fall_back():
    Z6 = intern(IntegerModRing(6))
    M = int_matrix([[2, 3, 1], [3, 2, 5], [1, 4, 3]], Z6)
    assert det(M) == det_berkowitz(M) == det_clow(M) == Z6(leibniz_det([[2, 3, 1], [3, 2, 5], [1, 4, 3]]))
    Z4 = intern(IntegerModRing(4))
    M = int_matrix([[2, 1, 3, 0], [1, 2, 0, 3], [3, 3, 2, 1], [0, 1, 1, 2]], Z4)
    assert det_clow(M) == det_berkowitz(M)
    assert charpoly_berkowitz(M).coeff(0) == det_clow(M)


def test_random_six_by_six_against_cofactor():
    rng = SplitMix64(5)
    for _ in range(5):
        rows = random_rows(rng, 6)
        M = int_matrix(rows)
        assert det(M) == cofactor_det(M.rows, ZZ) == ZZ(leibniz_det(rows))


@given(square)
def test_three_determinants_agree(rows):
    M = int_matrix(rows)
    d = ZZ(leibniz_det(rows))
    assert det(M) == det_berkowitz(M) == det_clow(M) == d
    assert det(M.transpose()) == d


def test_det_multiplicative():
    rng = SplitMix64(8)
    for _ in range(10):
        A, B = int_matrix(random_rows(rng, 5)), int_matrix(random_rows(rng, 5))
        assert det(A * B) == det(A) * det(B)


def test_det_over_polynomial_ring_interpolates():
    P = intern(PolynomialRing(ZZ, "x"))
    x = P.gen()
    S = MatrixSpace(P, 2, 2)
    assert det(S.from_rows([[x, P(0)], [P(0), x]])) == x**2
    assert det(S.from_rows([[P(3), P(1)], [P(2), P(5)]])) == P(13)
    rng = SplitMix64(21)
    rows = [[P.from_coeffs([rng.randint(-5, 5) for _ in range(3)]) for _ in range(4)] for _ in range(4)]
    M = MatrixSpace(P, 4, 4).from_rows(rows)
    assert det_interpolation(M) == cofactor_det(rows, P)


def test_charpoly_simple_cases():
    f = ZT.parse("T^3 + 3*T + 1")
    C = companion_matrix(f)
    for cp in (charpoly_berkowitz, charpoly_danilevsky_ff):
        assert cp(C) == f
        assert cp(MatrixSpace(ZZ, 3, 3).identity()) == ZT.parse("(T-1)^3")


@settings(max_examples=40)
@given(square)
def test_charpolys_agree_and_annihilate(rows):
    M = int_matrix(rows)
    stats = DivisionStats()
    a = charpoly_danilevsky_ff(M, stats)
    b = charpoly_berkowitz(M)
    c = charpoly_hessenberg(M.map(QQ, QQ))
    assert stats.inexact == 0
    assert a == b
    assert [QQ(x) for x in a.coeffs] == list(c.coeffs)
    assert poly_at_matrix(a, M).is_zero()


def test_charpoly_over_prime_field():
    F = intern(IntegerModRing(101))
    rng = SplitMix64(2)
    for _ in range(10):
        M = int_matrix(random_rows(rng, 6), F)
        a = charpoly_hessenberg(M)
        assert a == charpoly_berkowitz(M) == charpoly_danilevsky_ff(M)
        assert poly_at_matrix(a, M).is_zero()


def test_danilevsky_fraction_free_on_eight_by_eight():
    rng = SplitMix64(13)
    for _ in range(50):
        stats = DivisionStats()
        charpoly_danilevsky_ff(int_matrix(random_rows(rng, 8)), stats)
        assert stats.inexact == 0


def test_danilevsky_zero_pivot_blocks():
    M = int_matrix([[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    assert charpoly_danilevsky_ff(M) == charpoly_berkowitz(M)


def test_minpoly_small_cases():
    S = MatrixSpace(QQ, 3, 3)
    assert minpoly_field(S.identity()) == intern(PolynomialRing(QQ, "T")).parse("T - 1")
    D = int_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert minpoly_integer(D) == ZT.parse("(T-1)*(T-2)")
    assert minpoly_integer(int_matrix([[0] * 4] * 4)) == ZT.parse("T")
    assert minpoly_integer(int_matrix([[2, 0, 0], [0, 2, 0], [0, 0, 3]])) == ZT.parse("(T-2)*(T-3)")


def test_minpoly_of_duplicated_companion_block():
    m = ZT.parse("T^3 - 2*T + 5")
    C = companion_matrix(m)
    rows = [[0] * 6 for _ in range(6)]
    for i in range(3):
        for j in range(3):
            rows[i][j] = rows[i + 3][j + 3] = C.rows[i][j].value
    M = int_matrix(rows)
    mp, cert = minpoly_integer(M, certificate=True)
    assert mp == m and cert.verified
    assert charpoly_berkowitz(M) == m**2
    assert poly_at_matrix(mp, M).is_zero()


@settings(max_examples=25)
@given(square)
def test_minpoly_integer_matches_rational_oracle(rows):
    M = int_matrix(rows)
    mp = minpoly_integer(M)
    want = fraction_matrix_minpoly(rows)
    assert [c.value for c in mp.coeffs] == want
    assert [QQ(c) for c in mp.coeffs] == list(minpoly_field(M.map(QQ, QQ)).coeffs)
    assert charpoly_berkowitz(M).divrem(mp)[1].is_zero()


def test_matrix_json_round_trip():
    M = int_matrix([[1, -2], [3, 4]])
    assert matrix_from_json(matrix_to_json(M)) == M
