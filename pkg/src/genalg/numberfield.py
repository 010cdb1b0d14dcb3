"""Absolute number fields Q[x]/(f) with f monic, integral and irreducible.

Elements are an integer numerator vector with one common denominator.
Products are reduced with a precomputed table of x^i mod f (stored
sparsely, so trinomials like x^n + 2 reduce in linear time).  Products can
also be left unreduced and summed before a single reduction, which is what
the ring's ``_dot`` hook does for matrix code.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DivisionByZero, InvalidParameter
from .poly import intpoly
from .rings import QQ, ZZ, Rational, Ring, RingElement, RingKind
from .textfmt import format_univariate, join_terms, monomial


def _coerce_defining(poly) -> tuple[int, ...]:
    from .poly.dense import DensePoly, PolynomialRing

    if isinstance(poly, str):
        poly = PolynomialRing(QQ, "x").parse(poly)
    if isinstance(poly, DensePoly):
        coeffs = []
        for c in poly.coeffs:
            f = Fraction(int(c)) if not isinstance(c, Rational) else c.to_fraction()
            if f.denominator != 1:
                raise InvalidParameter("defining polynomial must be integral")
            coeffs.append(f.numerator)
    else:
        coeffs = [int(c) for c in poly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise InvalidParameter("defining polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise InvalidParameter("defining polynomial must be monic")
    return tuple(coeffs)


class NumberField(Ring):
    kind = RingKind.NUMBER_FIELD
    is_field = True

    def __init__(self, poly, var: str = "a"):
        f = _coerce_defining(poly)
        self.f = f
        self.d = d = len(f) - 1
        self.var = var
        self.base = QQ
        self.lead_inv = 1
        # x^i mod f for i = d .. 2d-2, dense and as sparse (index, coeff) pairs
        table = []
        cur = [-c for c in f[:d]]
        for _ in range(max(0, d - 1)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * g for c, g in zip(cur, f[:d])]
        self.power_table = table
        self._sparse = [[(j, c) for j, c in enumerate(row) if c] for row in table]
        self.newton_sums = _newton_sums(f)
        self._freeze()

    def _key(self):
        return ("NF", self.f, self.var)

    def __str__(self):
        return f"NumberField({format_univariate(list(self.f), 'x')})"

    __repr__ = __str__

    def degree(self) -> int:
        return self.d

    def defining_poly(self):
        from .poly.dense import PolynomialRing

        return PolynomialRing(QQ, "x").from_coeffs(self.f)

    @property
    def characteristic(self):
        return 0

    def _from_int(self, n):
        return NFElem(self, (n,) + (0,) * (self.d - 1), 1)

    def _from_base(self, b):
        return NFElem(self, (b.num,) + (0,) * (self.d - 1), b.den)

    def _from_other(self, value):
        if isinstance(value, Fraction):
            return self._from_base(QQ(value))
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        return super()._from_other(value)

    def from_coeffs(self, coeffs) -> "NFElem":
        """Element from power-basis coefficients (ints, Fractions or rationals)."""
        fr = [
            c.to_fraction() if isinstance(c, Rational) else Fraction(c) for c in coeffs
        ]
        if len(fr) > self.d:
            den = 1
            for c in fr:
                den = den * c.denominator // gcd(den, c.denominator)
            raw = [int(c * den) for c in fr]
            return _make(self, _reduce_raw(self, raw), den)
        fr += [Fraction(0)] * (self.d - len(fr))
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return _make(self, [int(c * den) for c in fr], den)

    def from_ints(self, num, den: int = 1) -> "NFElem":
        num = list(num) + [0] * (self.d - len(num))
        if len(num) > self.d:
            num = _reduce_raw(self, num)
        return _make(self, num, den)

    def gen(self) -> "NFElem":
        if self.d == 1:
            return self._from_int(-self.f[0])
        return NFElem(self, (0, 1) + (0,) * (self.d - 2), 1)

    def _parse_names(self):
        return {self.var: self.gen()}

    def _dot(self, xs, ys):
        acc = NFUnreduced(self)
        for x, y in zip(xs, ys):
            acc.add_product(x, y)
        return acc.reduce()

    def gcd(self, a, b):
        return self.zero() if a.is_zero() and b.is_zero() else self.one()

    def canonical_unit(self, a):
        return a if not a.is_zero() else self.one()


def _newton_sums(f) -> list[int]:
    """S_k = sum of k-th powers of the roots, k = 0..d, from Newton's identities."""
    d = len(f) - 1
    c = f  # c[i] = coefficient of x^i
    S = [d]
    for k in range(1, d + 1):
        acc = k * c[d - k]
        for i in range(1, k):
            acc += c[d - i] * S[k - i]
        S.append(-acc)
    return S


def _reduce_raw(K: NumberField, raw: list[int]) -> list[int]:
    d = K.d
    low = list(raw[:d]) + [0] * max(0, d - len(raw))
    sparse = K._sparse
    for i in range(d, len(raw)):
        c = raw[i]
        if c:
            for j, t in sparse[i - d]:
                low[j] += c * t
    return low


def _make(K, num, den) -> "NFElem":
    if den == 0:
        raise DivisionByZero("zero denominator")
    if den < 0:
        num = [-x for x in num]
        den = -den
    if den != 1:
        g = den
        for x in num:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if not any(num):
            return NFElem(K, (0,) * K.d, 1)
        if g != 1:
            num = [x // g for x in num]
            den //= g
    return NFElem(K, tuple(num), den)


class NFElem(RingElement):
    __slots__ = ("num", "den")

    def __init__(self, parent: NumberField, num: tuple, den: int):
        self.parent = parent
        self.num = num
        self.den = den

    def coeffs(self) -> list[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    def is_integral_coeffs(self) -> bool:
        return self.den == 1

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def _add(self, o):
        if self.den == o.den:
            return _make(self.parent, [a + b for a, b in zip(self.num, o.num)], self.den)
        return _make(
            self.parent,
            [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
            self.den * o.den,
        )

    def _sub(self, o):
        if self.den == o.den:
            return _make(self.parent, [a - b for a, b in zip(self.num, o.num)], self.den)
        return _make(
            self.parent,
            [a * o.den - b * self.den for a, b in zip(self.num, o.num)],
            self.den * o.den,
        )

    def _neg(self):
        return NFElem(self.parent, tuple(-a for a in self.num), self.den)

    def _mul(self, o):
        return nf_mul(self, o)

    def _is_zero(self):
        return not any(self.num)

    def _eq(self, o):
        return self.den == o.den and self.num == o.num

    def is_one(self):
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def _inverse(self):
        return nf_inverse(self)

    def to_poly(self):
        from .poly.dense import PolynomialRing

        return PolynomialRing(QQ, "x").from_coeffs(self.coeffs())

    def trace(self) -> Fraction:
        return nf_trace(self)

    def norm(self) -> Fraction:
        return nf_norm(self)

    def mul_unreduced(self, o) -> "NFUnreduced":
        return nf_mul_unreduced(self, o)

    def _assign(self, o):
        self.num, self.den = o.num, o.den

    def __str__(self):
        var = self.parent.var
        items = [
            (str(Fraction(x, self.den)), monomial(var, i))
            for i, x in reversed(list(enumerate(self.num)))
            if x
        ]
        return join_terms(items)


class NFUnreduced:
    """Accumulator for full (unreduced) products: degree up to 2d-2."""

    __slots__ = ("parent", "num", "den")

    def __init__(self, parent: NumberField, num=None, den: int = 1):
        self.parent = parent
        self.num = num if num is not None else [0] * max(1, 2 * parent.d - 1)
        self.den = den

    def add_product(self, a: NFElem, b: NFElem) -> "NFUnreduced":
        raw = intpoly.mul(list(a.num), list(b.num))
        self._accumulate(raw, a.den * b.den)
        return self

    def _accumulate(self, raw, den):
        if den == self.den:
            acc = self.num
            for i, c in enumerate(raw):
                acc[i] += c
            return
        g = gcd(den, self.den)
        l = den // g * self.den
        fs, fr = l // self.den, l // den
        acc = [x * fs for x in self.num]
        for i, c in enumerate(raw):
            acc[i] += c * fr
        self.num, self.den = acc, l

    def add_assign(self, other: "NFUnreduced") -> "NFUnreduced":
        self._accumulate(other.num, other.den)
        return self

    def reduce(self) -> NFElem:
        return _make(self.parent, _reduce_raw(self.parent, self.num), self.den)


def nf_mul(a: NFElem, b: NFElem) -> NFElem:
    K = a.parent
    raw = intpoly.mul(list(a.num), list(b.num))
    return _make(K, _reduce_raw(K, raw), a.den * b.den)


def nf_mul_unreduced(a: NFElem, b: NFElem) -> NFUnreduced:
    return NFUnreduced(a.parent).add_product(a, b)


def nf_reduce(u: NFUnreduced) -> NFElem:
    return u.reduce()


def nf_trace(a: NFElem) -> Fraction:
    S = a.parent.newton_sums
    return Fraction(sum(c * s for c, s in zip(a.num, S)), a.den)


def nf_norm(a: NFElem) -> Fraction:
    """N(a) = res(f, numerator) / den^d, with f monic."""
    K = a.parent
    if a.is_zero():
        return Fraction(0)
    num = list(a.num)
    while num and num[-1] == 0:
        num.pop()
    if len(num) == 1:
        r = num[0] ** K.d
    elif K.d <= 8:
        from .poly.dense import PolynomialRing

        P = PolynomialRing(ZZ, "x")
        r = P.from_coeffs(K.f).resultant(P.from_coeffs(num)).value
    else:
        r = intpoly.resultant(list(K.f), num)
    return Fraction(r, a.den**K.d)


def nf_inverse(a: NFElem) -> NFElem:
    if a.is_zero():
        raise DivisionByZero("inverse of zero in a number field")
    K = a.parent
    if a.is_rational():
        return K.from_coeffs([Fraction(a.den, a.num[0])])
    if K.d > 8:
        u, r = intpoly.inverse_cofactor(list(K.f), list(a.num))
        return _make(K, [x * a.den for x in u], r)
    from .poly.dense import PolynomialRing

    P = PolynomialRing(QQ, "x")
    A = P.from_coeffs(a.num)
    g, s, _ = A.xgcd(P.from_coeffs(K.f))
    if g.degree() != 0:
        raise InvalidParameter("defining polynomial is not irreducible")
    inv = K.from_coeffs([c.to_fraction() for c in s.coeffs])
    return inv._mul(K._from_int(a.den))


def multiplication_matrix(a: NFElem) -> list[list[Fraction]]:
    """Rows are the coordinates of a*x^i in the power basis."""
    K = a.parent
    rows = []
    cur = a
    x = K.gen()
    for _ in range(K.d):
        rows.append(cur.coeffs())
        cur = cur._mul(x)
    return rows
