import math
from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genalg.balls import (
    BallContext,
    ComplexBox,
    ball_roots,
    conjugates,
    dobrowolski_threshold,
    is_torsion,
    poly_eval,
)
from genalg.errors import ContainsNegative, ContainsZero, DivisionByZero, NotSquarefree
from genalg.numberfield import NumberField
from genalg.poly.dense import PolynomialRing
from genalg.rings import QQ, intern

QX = intern(PolynomialRing(QQ, "x"))
CTX = BallContext(64)

fracs = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
radii = st.fractions(min_value=0, max_value=10, max_denominator=1000)
positions = st.fractions(min_value=-1, max_value=1, max_denominator=97)


def point(ball, t):
    """The point mid + t*rad of a ball, t in [-1, 1]."""
    return ball.mid_fraction() + t * ball.rad_fraction()


def contains_sqrt(ball, x):
    lo, hi = ball.lower(), ball.upper()
    return (lo <= 0 or lo * lo <= x) and hi >= 0 and hi * hi >= x


def test_exact_small_examples():
    six = CTX(2) * CTX(3)
    assert six.contains(6) and six.rad_fraction() <= Fraction(1, 1 << 61)
    s = CTX(1, rad=Fraction(1, 2)) + CTX(1, rad=Fraction(1, 2))
    assert s.lower() <= 1 and s.upper() >= 3
    assert str(CTX(Fraction(1, 4))).startswith("[0.25")
    with pytest.raises(ContainsZero):
        CTX(1) / CTX(0, rad=1)
    with pytest.raises(ContainsNegative):
        CTX(-1).sqrt()


def test_context_rejects_tiny_precision():
    with pytest.raises(Exception):
        BallContext(1)


@settings(max_examples=200)
@given(fracs, radii, fracs, radii, positions, positions, st.sampled_from("+-*/"))
def test_binary_operations_contain_exact_results(m1, r1, m2, r2, t1, t2, op):
    a, b = CTX(m1, rad=r1), CTX(m2, rad=r2)
    x, y = point(a, t1), point(b, t2)
    if op == "+":
        assert (a + b).contains(x + y)
    elif op == "-":
        assert (a - b).contains(x - y)
    elif op == "*":
        assert (a * b).contains(x * y)
    elif not b.contains_zero():
        assert (a / b).contains(x / y)


@settings(max_examples=100)
@given(fracs, radii, positions, st.integers(0, 6))
def test_unary_operations_contain_exact_results(m, r, t, k):
    a = CTX(m, rad=r)
    x = point(a, t)
    assert (a**k).contains(x**k)
    assert abs(a).contains(abs(x))
    assert a.sqr().contains(x * x)
    if a.lower() >= 0:
        assert contains_sqrt(a.sqrt(), x)


@settings(max_examples=100)
@given(fracs, radii, fracs, radii, positions, positions)
def test_complex_box_operations(a, ra, b, rb, t1, t2):
    z = ComplexBox(CTX(a, rad=ra), CTX(b, rad=rb))
    x, y = point(z.re, t1), point(z.im, t2)
    w = z * z + z
    assert w.contains(x * x - y * y + x, 2 * x * y + y)
    assert z.abs_sq().contains(x * x + y * y)
    assert contains_sqrt(abs(z), x * x + y * y)


def test_poly_eval_near_sqrt2():
    r = CTX(Fraction(isqrt(2 << 100), 1 << 50), rad=Fraction(1, 1 << 50))
    assert poly_eval([-2, 0, 1], r).contains(0)


def sqrt2_bracket(k):
    s = isqrt(2 << (2 * k))
    return Fraction(s, 1 << k), Fraction(s + 1, 1 << k)


def test_sqrt2_roots_at_128_bits():
    boxes = ball_roots(QX.parse("x^2 - 2"), 128)
    assert len(boxes) == 2
    lo, hi = sqrt2_bracket(512)
    neg, pos = boxes
    for box, sign in ((pos, 1), (neg, -1)):
        assert box.is_real()
        assert box.diameter() <= Fraction(1, 1 << 128)
        a, b = sorted((sign * lo, sign * hi))
        assert box.re.lower() <= a and b <= box.re.upper()


def test_cubic_roots_and_vieta():
    boxes = ball_roots(QX.parse("x^3 + 3*x + 1"), 80)
    assert sum(b.is_real() for b in boxes) == 1
    prod = boxes[0] * boxes[1] * boxes[2]
    assert prod.contains(-1)
    total = boxes[0] + boxes[1] + boxes[2]
    assert total.contains(0)


def test_cyclotomic_roots_on_unit_circle():
    boxes = ball_roots(QX.parse("x^4 + 1"), 64)
    assert len(boxes) == 4 and not any(b.is_real() for b in boxes)
    for b in boxes:
        assert abs(b).contains(1)


def test_roots_need_squarefree_input():
    with pytest.raises(NotSquarefree):
        ball_roots(QX.parse("(x - 1)^2 * (x + 2)"), 64)


def test_conjugates_examples():
    K = intern(NumberField("x^2 - 2", "x"))
    boxes = conjugates(K.gen(), 128)
    lo, hi = sqrt2_bracket(400)
    assert any(b.re.lower() <= lo and hi <= b.re.upper() for b in boxes)
    assert any(b.re.lower() <= -hi and -lo <= b.re.upper() for b in boxes)
    for b in conjugates(K(Fraction(3, 7)), 64):
        assert b.contains(Fraction(3, 7))
    C = intern(NumberField("x^3 + 3*x + 1", "a"))
    alpha = C.parse("a^2 + a + 1")
    boxes = conjugates(alpha, 128)
    assert all(b.diameter() <= Fraction(1, 1 << 128) for b in boxes)
    assert (boxes[0] + boxes[1] + boxes[2]).contains(alpha.trace())
    assert (boxes[0] * boxes[1] * boxes[2]).contains(alpha.norm())


def test_refining_precision_nests():
    C = intern(NumberField("x^3 + 3*x + 1", "a"))
    alpha = C.parse("2*a^2 - a")
    coarse = conjugates(alpha, 64)
    fine = conjugates(alpha, 128)
    for f, c in zip(fine, coarse):
        ulp = Fraction(1, 1 << 64)
        for part_f, part_c in ((f.re, c.re), (f.im, c.im)):
            assert part_c.lower() - ulp <= part_f.lower()
            assert part_f.upper() <= part_c.upper() + ulp


def test_threshold_constant():
    for d in (2, 3, 8, 16):
        assert dobrowolski_threshold(d) == pytest.approx(1 + math.log(d) / (6 * d * d), rel=1e-15)
    assert dobrowolski_threshold(2) == pytest.approx(1.0288811, abs=1e-7)


@pytest.mark.parametrize(
    "field, elem, order",
    [("x^2+1", "x", 4), ("x^4+1", "x", 8), ("x^4-x^2+1", "x", 12), ("x^2+1", "-1", 2), ("x^2+x+1", "x", 3)],
)
def test_roots_of_unity(field, elem, order):
    K = intern(NumberField(field, "x"))
    res = is_torsion(K.parse(elem))
    assert res.is_torsion and res.order == order
    assert str(res) == f"torsion, order {order}"


def test_non_torsion_examples():
    K = intern(NumberField("x^2+1", "x"))
    assert not is_torsion(K.parse("1 + x")).is_torsion
    assert str(is_torsion(K(2))) == "not torsion"
    with pytest.raises(DivisionByZero):
        is_torsion(K.zero())


def test_non_torsion_units_use_the_ball_test():
    C = intern(NumberField("x^3 + 3*x + 1", "a"))
    a = C.gen()
    for k in (1, -1, 2, 5, -7):
        res = is_torsion(a**k)
        assert not res.is_torsion and res.precision > 0
    Q2 = intern(NumberField("x^2 - 2", "x"))
    res = is_torsion(Q2.parse("1 + x"))
    assert not res.is_torsion and res.precision > 0


def test_all_small_cyclotomic_elements():
    # every root of unity in Q(zeta_8), plus a few non-torsion companions
    K = intern(NumberField("x^4+1", "x"))
    z = K.gen()
    for k in range(8):
        res = is_torsion(z**k)
        assert res.is_torsion and res.order == 8 // math.gcd(8, k)
    for e in ("x + 1", "x^2 + x + 1", "1 + x + x^3"):
        alpha = K.parse(e)
        exact = any((alpha**k).is_one() for k in range(1, 41))
        assert is_torsion(alpha).is_torsion == exact
