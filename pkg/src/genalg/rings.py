"""Parent/element model and the base rings.

Every domain is a *parent* object (a ``Ring``) that carries its parameters,
e.g. the modulus of Z/nZ.  Elements hold a reference to their parent.
Parents compare structurally: two ``IntegerModRing(7)`` objects are equal
and hash alike, and the factory functions intern them so the common case
is an identity check.

Binary operations accept operands from the same parent, Python ints, and
elements of a ring further down the base chain (which are coerced up).
Anything else raises ``MixedParents``.
"""
from __future__ import annotations

import enum
from array import array
from fractions import Fraction
from math import gcd

from . import gfpoly
from .errors import (
    DivisionByZero,
    ImpossibleInverse,
    InexactDivision,
    InvalidParameter,
    MixedParents,
    NoCoercion,
    NotInvertible,
)
from .intarith import is_prime


class RingKind(enum.Enum):
    INTEGERS = "Integers"
    RATIONALS = "Rationals"
    INTEGER_RESIDUE = "IntegerResidue"
    POLYNOMIAL_RING = "PolynomialRing"
    MPOLY_RING = "MPolyRing"
    RESIDUE_RING = "ResidueRing"
    FRACTION_FIELD = "FractionField"
    FINITE_FIELD = "FiniteField"
    MATRIX_SPACE = "MatrixSpace"
    NUMBER_FIELD = "NumberField"


_INTERNED: dict = {}


def intern(ring):
    """Return the canonical instance structurally equal to ``ring``."""
    return _INTERNED.setdefault(ring, ring)


class Ring:
    """Base class for parent objects."""

    kind: RingKind
    is_field = False
    is_domain = True
    base: "Ring | None" = None

    def _key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Ring) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False) and not name.startswith("_c_"):
            raise AttributeError(f"{type(self).__name__} is immutable")
        object.__setattr__(self, name, value)

    def _freeze(self):
        object.__setattr__(self, "_frozen", True)

    # -- coercion -------------------------------------------------------
    def __call__(self, value=0):
        if isinstance(value, RingElement):
            if value.parent is self or value.parent == self:
                return value
            if self.base is not None:
                try:
                    return self._from_base(self.base(value))
                except NoCoercion:
                    pass
            if isinstance(value.parent, IntegerRing):
                return self._from_int(value.value)
            raise NoCoercion(f"no coercion from {value.parent} to {self}")
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self._from_int(value)
        if isinstance(value, str):
            return self.parse(value)
        return self._from_other(value)

    def _from_int(self, n: int):
        raise NoCoercion(f"cannot coerce int into {self}")

    def _from_base(self, b):
        raise NoCoercion(f"no coercion from base into {self}")

    def _from_other(self, value):
        raise NoCoercion(f"cannot coerce {type(value).__name__} into {self}")

    def parse(self, text: str):
        from .textfmt import parse_expr

        return parse_expr(text, self, self._parse_names())

    def _parse_names(self) -> dict:
        names = {}
        b = self.base
        if b is not None:
            for k, v in b._parse_names().items():
                names[k] = self(v)
        return names

    def zero(self):
        return self._from_int(0)

    def one(self):
        return self._from_int(1)

    # -- generic helpers -----------------------------------------------
    def _dot(self, xs, ys):
        """sum(x*y); parents with cheap delayed reduction override this."""
        acc = self.zero()
        for x, y in zip(xs, ys):
            acc = acc._add(x._mul(y))
        return acc

    def gcd(self, a, b):
        raise NotImplementedError(f"gcd not available in {self}")

    def canonical_unit(self, a):
        """Unit u such that a/u is the normalised associate of a."""
        return self.one()

    @property
    def characteristic(self) -> int:
        raise NotImplementedError


def _is_below(lower: Ring, upper: Ring) -> bool:
    if isinstance(lower, IntegerRing):
        return True
    r = upper.base
    while r is not None:
        if r == lower:
            return True
        r = r.base
    return False


def _pair(a, b):
    if type(b) is int:
        return a, a.parent._from_int(b)
    if not isinstance(b, RingElement):
        return None
    pa, pb = a.parent, b.parent
    if pa is pb or pa == pb:
        return a, b
    if _is_below(pb, pa):
        return a, pa(b)
    if _is_below(pa, pb):
        return pb(a), b
    raise MixedParents(f"{pa} vs {pb}")


class RingElement:
    __slots__ = ("parent",)

    # subclasses implement _add _sub _neg _mul _is_zero _eq _assign
    def __add__(self, other):
        pr = _pair(self, other)
        if pr is None:
            return NotImplemented
        return pr[0]._add(pr[1])

    def __radd__(self, other):
        pr = _pair(self, other)
        if pr is None:
            return NotImplemented
        return pr[1]._add(pr[0])

    def __sub__(self, other):
        pr = _pair(self, other)
        if pr is None:
            return NotImplemented
        return pr[0]._sub(pr[1])

    def __rsub__(self, other):
        pr = _pair(self, other)
        if pr is None:
            return NotImplemented
        return pr[1]._sub(pr[0])

    def __mul__(self, other):
        pr = _pair(self, other)
        if pr is None:
            return NotImplemented
        return pr[0]._mul(pr[1])

    def __rmul__(self, other):
        pr = _pair(self, other)
        if pr is None:
            return NotImplemented
        return pr[1]._mul(pr[0])

    def __neg__(self):
        return self._neg()

    def __pos__(self):
        return self

    def __truediv__(self, other):
        pr = _pair(self, other)
        if pr is None:
            return NotImplemented
        return pr[0].divexact(pr[1])

    def __rtruediv__(self, other):
        pr = _pair(self, other)
        if pr is None:
            return NotImplemented
        return pr[1].divexact(pr[0])

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        result = self.parent.one()
        base = self
        while k:
            if k & 1:
                result = result._mul(base)
            k >>= 1
            if k:
                base = base._mul(base)
        return result

    def __eq__(self, other):
        try:
            pr = _pair(self, other)
        except MixedParents:
            return False
        if pr is None:
            return NotImplemented
        return pr[0]._eq(pr[1])

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return str(self)

    def is_zero(self) -> bool:
        return self._is_zero()

    def is_one(self) -> bool:
        return self._eq(self.parent.one())

    def is_unit(self) -> bool:
        try:
            self.inverse()
        except (NotInvertible, DivisionByZero):
            return False
        return True

    def inverse(self):
        """Multiplicative inverse (``try_inverse``)."""
        if self.is_zero():
            raise DivisionByZero(f"inverse of zero in {self.parent}")
        return self._inverse()

    def _inverse(self):
        raise NotInvertible(f"{self} is not invertible in {self.parent}")

    def divexact(self, other):
        """Exact quotient self/other; raises if it does not exist."""
        if other.is_zero():
            raise DivisionByZero(f"division by zero in {self.parent}")
        return self._divexact(other)

    def _divexact(self, other):
        return self._mul(other.inverse())

    def copy(self):
        return self

    def _assign(self, other):
        raise NotImplementedError

    def _assign_mul(self, a, b):
        self._assign(a._mul(b))

    def _iadd(self, t):
        self._assign(self._add(t))


def _check_same(*elems):
    p = elems[0].parent
    for e in elems[1:]:
        if not (e.parent is p or e.parent == p):
            raise MixedParents(f"{p} vs {e.parent}")


def mul_into(dst, a, b):
    """dst <- a*b in place.  ``dst`` may alias ``a`` or ``b``."""
    _check_same(dst, a, b)
    dst._assign_mul(a, b)
    return dst


def add_assign(acc, t):
    """acc <- acc + t in place."""
    _check_same(acc, t)
    acc._iadd(t)
    return acc


# ----------------------------------------------------------------------
# Integers
# ----------------------------------------------------------------------
class IntegerRing(Ring):
    kind = RingKind.INTEGERS

    def __init__(self):
        self._freeze()

    def _key(self):
        return ("ZZ",)

    def __str__(self):
        return "ZZ"

    __repr__ = __str__

    def _from_int(self, n):
        return Integer(self, n)

    def _from_other(self, value):
        if isinstance(value, Fraction) and value.denominator == 1:
            return Integer(self, value.numerator)
        return super()._from_other(value)

    def _dot(self, xs, ys):
        return Integer(self, sum(x.value * y.value for x, y in zip(xs, ys)))

    def gcd(self, a, b):
        return Integer(self, gcd(a.value, b.value))

    def canonical_unit(self, a):
        return Integer(self, -1 if a.value < 0 else 1)

    @property
    def characteristic(self):
        return 0


class Integer(RingElement):
    __slots__ = ("value",)

    def __init__(self, parent, value: int):
        self.parent = parent
        self.value = value

    def _add(self, o):
        return Integer(self.parent, self.value + o.value)

    def _sub(self, o):
        return Integer(self.parent, self.value - o.value)

    def _neg(self):
        return Integer(self.parent, -self.value)

    def _mul(self, o):
        return Integer(self.parent, self.value * o.value)

    def _is_zero(self):
        return self.value == 0

    def _eq(self, o):
        return self.value == o.value

    def is_one(self):
        return self.value == 1

    def __hash__(self):
        return hash(self.value)

    def _inverse(self):
        if self.value in (1, -1):
            return self
        raise NotInvertible(f"{self.value} is not a unit in ZZ")

    def _divexact(self, o):
        q, r = divmod(self.value, o.value)
        if r:
            raise InexactDivision(f"{self.value} / {o.value}")
        return Integer(self.parent, q)

    def __floordiv__(self, o):
        return Integer(self.parent, self.value // int(o))

    def __mod__(self, o):
        return Integer(self.parent, self.value % int(o))

    def __lt__(self, o):
        return self.value < int(o)

    def __le__(self, o):
        return self.value <= int(o)

    def __gt__(self, o):
        return self.value > int(o)

    def __ge__(self, o):
        return self.value >= int(o)

    def __abs__(self):
        return Integer(self.parent, abs(self.value))

    def __int__(self):
        return self.value

    __index__ = __int__

    def _assign(self, o):
        self.value = o.value

    def _assign_mul(self, a, b):
        self.value = a.value * b.value

    def _iadd(self, t):
        self.value += t.value

    def __str__(self):
        return str(self.value)


# ----------------------------------------------------------------------
# Rationals
# ----------------------------------------------------------------------
class RationalField(Ring):
    kind = RingKind.RATIONALS
    is_field = True

    def __init__(self):
        self.base = ZZ
        self._freeze()

    def _key(self):
        return ("QQ",)

    def __str__(self):
        return "QQ"

    __repr__ = __str__

    def _from_int(self, n):
        return Rational(self, n, 1)

    def _from_base(self, b):
        return Rational(self, b.value, 1)

    def _from_other(self, value):
        if isinstance(value, Fraction):
            return Rational(self, value.numerator, value.denominator)
        if isinstance(value, tuple) and len(value) == 2:
            return self.make(*value)
        return super()._from_other(value)

    def make(self, num: int, den: int):
        if den == 0:
            raise DivisionByZero("zero denominator")
        g = gcd(num, den)
        if den < 0:
            g = -g
        return Rational(self, num // g, den // g)

    def gcd(self, a, b):
        return self.zero() if a.is_zero() and b.is_zero() else self.one()

    def canonical_unit(self, a):
        return a if not a.is_zero() else self.one()

    @property
    def characteristic(self):
        return 0


class Rational(RingElement):
    __slots__ = ("num", "den")

    def __init__(self, parent, num: int, den: int):
        # caller guarantees canonical form
        self.parent = parent
        self.num = num
        self.den = den

    @staticmethod
    def _canon(parent, n, d):
        g = gcd(n, d)
        if g != 1:
            n //= g
            d //= g
        return Rational(parent, n, d)

    def _add(self, o):
        if self.den == o.den:
            return self._canon(self.parent, self.num + o.num, self.den)
        return self._canon(self.parent, self.num * o.den + o.num * self.den, self.den * o.den)

    def _sub(self, o):
        if self.den == o.den:
            return self._canon(self.parent, self.num - o.num, self.den)
        return self._canon(self.parent, self.num * o.den - o.num * self.den, self.den * o.den)

    def _neg(self):
        return Rational(self.parent, -self.num, self.den)

    def _mul(self, o):
        g1 = gcd(self.num, o.den)
        g2 = gcd(o.num, self.den)
        return Rational(
            self.parent,
            (self.num // g1) * (o.num // g2),
            (self.den // g2) * (o.den // g1),
        )

    def _is_zero(self):
        return self.num == 0

    def _eq(self, o):
        return self.num == o.num and self.den == o.den

    def is_one(self):
        return self.num == 1 and self.den == 1

    def __hash__(self):
        return hash(Fraction(self.num, self.den))

    def _inverse(self):
        if self.num < 0:
            return Rational(self.parent, -self.den, -self.num)
        return Rational(self.parent, self.den, self.num)

    def _divexact(self, o):
        return self._mul(o._inverse())

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __lt__(self, o):
        return self.to_fraction() < _as_fraction(o)

    def __le__(self, o):
        return self.to_fraction() <= _as_fraction(o)

    def __gt__(self, o):
        return self.to_fraction() > _as_fraction(o)

    def __ge__(self, o):
        return self.to_fraction() >= _as_fraction(o)

    def __abs__(self):
        return Rational(self.parent, abs(self.num), self.den)

    def _assign(self, o):
        self.num, self.den = o.num, o.den

    def _assign_mul(self, a, b):
        r = a._mul(b)
        self.num, self.den = r.num, r.den

    def __str__(self):
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"


def _as_fraction(x):
    if isinstance(x, Rational):
        return x.to_fraction()
    if isinstance(x, Integer):
        return Fraction(x.value)
    return Fraction(x)


# ----------------------------------------------------------------------
# Z/nZ
# ----------------------------------------------------------------------
class IntegerModRing(Ring):
    kind = RingKind.INTEGER_RESIDUE

    def __init__(self, n: int):
        n = int(n)
        if n < 2:
            raise InvalidParameter(f"modulus must be >= 2, got {n}")
        self.n = n
        self.base = ZZ
        self.is_field = self.is_domain = is_prime(n)
        self._freeze()

    def _key(self):
        return ("Zn", self.n)

    def __str__(self):
        return f"ZZ/{self.n}"

    __repr__ = __str__

    def _from_int(self, k):
        return IntegerMod(self, k % self.n)

    def _from_base(self, b):
        return IntegerMod(self, b.value % self.n)

    def _dot(self, xs, ys):
        return IntegerMod(self, sum(x.value * y.value for x, y in zip(xs, ys)) % self.n)

    def gcd(self, a, b):
        if self.is_field:
            return self.zero() if a.is_zero() and b.is_zero() else self.one()
        raise NotImplementedError("gcd in Z/nZ with composite n")

    def canonical_unit(self, a):
        if self.is_field and not a.is_zero():
            return a
        return self.one()

    @property
    def characteristic(self):
        return self.n

    def order(self):
        return self.n


class IntegerMod(RingElement):
    __slots__ = ("value",)

    def __init__(self, parent, value: int):
        self.parent = parent
        self.value = value

    def _add(self, o):
        v = self.value + o.value
        n = self.parent.n
        return IntegerMod(self.parent, v - n if v >= n else v)

    def _sub(self, o):
        v = self.value - o.value
        return IntegerMod(self.parent, v + self.parent.n if v < 0 else v)

    def _neg(self):
        return IntegerMod(self.parent, (-self.value) % self.parent.n)

    def _mul(self, o):
        return IntegerMod(self.parent, self.value * o.value % self.parent.n)

    def _is_zero(self):
        return self.value == 0

    def _eq(self, o):
        return self.value == o.value

    def is_one(self):
        return self.value == 1

    def __hash__(self):
        return hash((self.parent.n, self.value))

    def is_unit(self):
        return gcd(self.value, self.parent.n) == 1

    def _inverse(self):
        n = self.parent.n
        g = gcd(self.value, n)
        if g != 1:
            raise ImpossibleInverse(self, g)
        return IntegerMod(self.parent, pow(self.value, -1, n))

    def __int__(self):
        return self.value

    def _assign(self, o):
        self.value = o.value

    def _assign_mul(self, a, b):
        self.value = a.value * b.value % self.parent.n

    def _iadd(self, t):
        self.value = (self.value + t.value) % self.parent.n

    def __str__(self):
        return str(self.value)


# ----------------------------------------------------------------------
# Fraction fields
# ----------------------------------------------------------------------
class FractionField(Ring):
    kind = RingKind.FRACTION_FIELD
    is_field = True

    def __init__(self, base: Ring):
        if not base.is_domain:
            raise InvalidParameter(f"{base} is not an integral domain")
        self.base = base
        self._freeze()

    def _key(self):
        return ("Frac", self.base._key())

    def __str__(self):
        return f"Frac({self.base})"

    __repr__ = __str__

    def _from_int(self, n):
        return FractionElem(self, self.base._from_int(n), self.base.one())

    def _from_base(self, b):
        return FractionElem(self, b, self.base.one())

    def make(self, num, den):
        R = self.base
        num, den = R(num), R(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        return _frac_canon(self, num, den)

    def gcd(self, a, b):
        return self.zero() if a.is_zero() and b.is_zero() else self.one()

    def canonical_unit(self, a):
        return a if not a.is_zero() else self.one()

    @property
    def characteristic(self):
        return self.base.characteristic


def _frac_canon(F, num, den):
    R = F.base
    if num.is_zero():
        return FractionElem(F, num, R.one())
    g = R.gcd(num, den)
    if not g.is_one():
        num, den = num.divexact(g), den.divexact(g)
    u = R.canonical_unit(den)
    if not u.is_one():
        num, den = num.divexact(u), den.divexact(u)
    return FractionElem(F, num, den)


class FractionElem(RingElement):
    __slots__ = ("num", "den")

    def __init__(self, parent, num, den):
        self.parent = parent
        self.num = num
        self.den = den

    def _add(self, o):
        return _frac_canon(self.parent, self.num * o.den + o.num * self.den, self.den * o.den)

    def _sub(self, o):
        return _frac_canon(self.parent, self.num * o.den - o.num * self.den, self.den * o.den)

    def _neg(self):
        return FractionElem(self.parent, -self.num, self.den)

    def _mul(self, o):
        return _frac_canon(self.parent, self.num * o.num, self.den * o.den)

    def _is_zero(self):
        return self.num.is_zero()

    def _eq(self, o):
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def _inverse(self):
        return _frac_canon(self.parent, self.den, self.num)

    def _assign(self, o):
        self.num, self.den = o.num, o.den

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


# ----------------------------------------------------------------------
# Residue rings R[x]/(m)
# ----------------------------------------------------------------------
class ResidueRing(Ring):
    """Quotient of a univariate polynomial ring by a principal ideal."""

    kind = RingKind.RESIDUE_RING

    def __init__(self, poly_ring, modulus):
        from .poly.dense import PolynomialRing

        if not isinstance(poly_ring, PolynomialRing):
            raise InvalidParameter("ResidueRing needs a univariate polynomial ring")
        m = poly_ring(modulus)
        if m.is_zero():
            raise InvalidParameter("zero defining polynomial")
        if not m.lc().is_unit():
            raise InvalidParameter("defining polynomial must have unit leading coefficient")
        if not m.lc().is_one():
            m = m * m.lc().inverse()
        self.base = poly_ring
        self.modulus = m
        self.degree = m.degree()
        domain = None
        if poly_ring.base.is_field and _is_finite(poly_ring.base):
            domain = _poly_irreducible_over_finite(m)
        object.__setattr__(self, "_c_domain", domain)
        self._freeze()

    @property
    def is_domain(self):
        return bool(self._c_domain)

    @property
    def is_field(self):
        return bool(self._c_domain)

    def _key(self):
        return ("Res", self.base._key(), tuple(str(c) for c in self.modulus.coeffs))

    def __str__(self):
        return f"{self.base}/({self.modulus})"

    __repr__ = __str__

    def _from_int(self, n):
        return ResidueElem(self, self.base._from_int(n))

    def _from_base(self, b):
        return ResidueElem(self, b.rem(self.modulus))

    def gen(self):
        return self._from_base(self.base.gen())

    def _parse_names(self):
        names = {k: self(v) for k, v in self.base._parse_names().items()}
        return names

    def _dot(self, xs, ys):
        raw = self.base._dot([x.rep for x in xs], [y.rep for y in ys])
        return ResidueElem(self, raw.rem(self.modulus))

    @property
    def characteristic(self):
        return self.base.characteristic

    def canonical_unit(self, a):
        return a if self.is_field and not a.is_zero() else self.one()

    def gcd(self, a, b):
        if self.is_field:
            return self.zero() if a.is_zero() and b.is_zero() else self.one()
        raise NotImplementedError


class ResidueElem(RingElement):
    __slots__ = ("rep",)

    def __init__(self, parent, rep):
        self.parent = parent
        self.rep = rep

    def _add(self, o):
        return ResidueElem(self.parent, self.rep._add(o.rep))

    def _sub(self, o):
        return ResidueElem(self.parent, self.rep._sub(o.rep))

    def _neg(self):
        return ResidueElem(self.parent, self.rep._neg())

    def _mul(self, o):
        return ResidueElem(self.parent, self.rep._mul(o.rep).rem(self.parent.modulus))

    def _is_zero(self):
        return self.rep.is_zero()

    def _eq(self, o):
        return self.rep._eq(o.rep)

    def __hash__(self):
        return hash(self.rep)

    def _inverse(self):
        m = self.parent.modulus
        g, s, _ = self.rep.xgcd(m)
        if g.degree() > 0:
            raise ImpossibleInverse(self, g)
        return ResidueElem(self.parent, (s * g.lc().inverse()).rem(m))

    def _assign(self, o):
        self.rep = o.rep

    def __str__(self):
        return str(self.rep)


def _is_finite(R) -> bool:
    return isinstance(R, (IntegerModRing, FiniteField))


def _poly_irreducible_over_finite(m) -> bool:
    """Rabin test for m over a finite field (m monic)."""
    from .intarith import factor_small

    R = m.parent
    K = R.base
    q = K.order()
    d = m.degree()
    if d < 1:
        return False
    if d == 1:
        return True
    x = R.gen()

    def frob(a, times):
        for _ in range(times):
            a = a.powmod(q, m)
        return a

    xq = [x]
    cur = x
    for _ in range(d):
        cur = cur.powmod(q, m)
        xq.append(cur)
    if not (xq[d] - x).rem(m).is_zero():
        return False
    for r in factor_small(d):
        h = xq[d // r] - x
        if m.gcd(h).degree() > 0:
            return False
    return True


# ----------------------------------------------------------------------
# Finite fields GF(p^k)
# ----------------------------------------------------------------------
class FiniteField(Ring):
    """GF(p^k) as (Z/pZ)[x]/(g) with g a seeded-random irreducible."""

    kind = RingKind.FINITE_FIELD
    is_field = True

    def __init__(self, p: int, k: int, var: str = "x", modulus=None, seed: int = 0):
        p, k = int(p), int(k)
        if not is_prime(p):
            raise InvalidParameter(f"{p} is not prime")
        if k < 1:
            raise InvalidParameter("degree must be >= 1")
        if modulus is None:
            modulus = gfpoly.random_irreducible(p, k, seed)
        else:
            modulus = gfpoly.monic(gfpoly.norm(list(modulus), p), p)
            if len(modulus) != k + 1 or not gfpoly.is_irreducible(modulus, p):
                raise InvalidParameter("modulus is not irreducible of degree k")
        self.p = p
        self.k = k
        self.var = var
        self.modulus = tuple(modulus)
        self.base = IntegerModRing(p)
        # x^i mod g for i = k .. 2k-2
        table = []
        cur = [0] * (k - 1) + [1]  # x^(k-1)
        for _ in range(k - 1):
            # multiply by x and reduce
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c - top * g) % p for c, g in zip(cur, modulus[:k])]
            table.append(tuple(cur))
        # table[i] = x^(k+i)
        first = tuple((-c) % p for c in modulus[:k])
        self._table = [first] + _extend_table(first, k, p, modulus)
        self._pack = _packer(p, k)
        self._zero_t = (0,) * k
        self._freeze()

    def _key(self):
        return ("GF", self.p, self.k, self.modulus, self.var)

    def __str__(self):
        return f"GF({self.p}^{self.k})"

    __repr__ = __str__

    def order(self):
        return self.p**self.k

    @property
    def characteristic(self):
        return self.p

    def _from_int(self, n):
        return FFElem(self, (n % self.p,) + (0,) * (self.k - 1))

    def _from_base(self, b):
        return self._from_int(b.value)

    def _from_other(self, value):
        if isinstance(value, (list, tuple)):
            c = [int(v) % self.p for v in value]
            if len(c) > self.k:
                c = _ff_reduce(self, c)
            return FFElem(self, tuple(c) + (0,) * (self.k - len(c)))
        return super()._from_other(value)

    def gen(self):
        if self.k == 1:
            return self._from_int(-self.modulus[0])
        return FFElem(self, (0, 1) + (0,) * (self.k - 2))

    def _parse_names(self):
        return {self.var: self.gen()}

    def _dot(self, xs, ys):
        pk = self._pack
        if pk is None:
            acc = [0] * (2 * self.k - 1)
            for x, y in zip(xs, ys):
                for i, a in enumerate(x.c):
                    if a:
                        for j, b in enumerate(y.c):
                            acc[i + j] += a * b
            return FFElem(self, tuple(_ff_reduce(self, acc)))
        total = 0
        for x, y in zip(xs, ys):
            total += x.packed() * y.packed()
        return FFElem(self, tuple(_ff_reduce(self, pk.unpack(total, 2 * self.k - 1))))

    def gcd(self, a, b):
        return self.zero() if a.is_zero() and b.is_zero() else self.one()

    def canonical_unit(self, a):
        return a if not a.is_zero() else self.one()

    def random_element(self, rng):
        return FFElem(self, tuple(rng.randbelow(self.p) for _ in range(self.k)))


def _extend_table(first, k, p, modulus):
    out = []
    cur = list(first)
    for _ in range(k - 2):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(c - top * g) % p for c, g in zip(cur, modulus[:k])]
        out.append(tuple(cur))
    return out


class _Packer:
    """Kronecker packing of small coefficient vectors into one int."""

    __slots__ = ("code", "width")

    def __init__(self, code, width):
        self.code = code
        self.width = width

    def pack(self, coeffs) -> int:
        return int.from_bytes(array(self.code, coeffs).tobytes(), "little")

    def unpack(self, value: int, length: int) -> list[int]:
        a = array(self.code)
        a.frombytes(value.to_bytes(self.width * length, "little"))
        return a.tolist()


def _packer(p, k):
    # slot must hold a sum of up to 2^16 products of reduced coefficients
    need = ((p - 1) ** 2 * k).bit_length() + 16
    if need <= 32:
        return _Packer("I", 4)
    if need <= 64:
        return _Packer("Q", 8)
    return None


def _ff_reduce(F, raw) -> list[int]:
    p, k = F.p, F.k
    low = [c % p for c in raw[:k]] + [0] * max(0, k - len(raw))
    table = F._table
    for i in range(k, len(raw)):
        c = raw[i] % p
        if c:
            row = table[i - k]
            for j in range(k):
                low[j] += c * row[j]
    return [c % p for c in low]


class FFElem(RingElement):
    __slots__ = ("c", "_packed")

    def __init__(self, parent, c: tuple):
        self.parent = parent
        self.c = c
        self._packed = None

    def packed(self) -> int:
        if self._packed is None:
            self._packed = self.parent._pack.pack(self.c)
        return self._packed

    def _add(self, o):
        p = self.parent.p
        return FFElem(self.parent, tuple((a + b) % p for a, b in zip(self.c, o.c)))

    def _sub(self, o):
        p = self.parent.p
        return FFElem(self.parent, tuple((a - b) % p for a, b in zip(self.c, o.c)))

    def _neg(self):
        p = self.parent.p
        return FFElem(self.parent, tuple((-a) % p for a in self.c))

    def _mul(self, o):
        F = self.parent
        pk = F._pack
        if pk is not None:
            raw = pk.unpack(self.packed() * o.packed(), 2 * F.k - 1)
        else:
            raw = [0] * (2 * F.k - 1)
            for i, a in enumerate(self.c):
                if a:
                    for j, b in enumerate(o.c):
                        raw[i + j] += a * b
        return FFElem(F, tuple(_ff_reduce(F, raw)))

    def _is_zero(self):
        return not any(self.c)

    def _eq(self, o):
        return self.c == o.c

    def is_one(self):
        return self.c[0] == 1 and not any(self.c[1:])

    def __hash__(self):
        return hash(self.c)

    def _inverse(self):
        F = self.parent
        g, s, _ = gfpoly.xgcd(list(self.c), list(F.modulus), F.p)
        return F._from_other(s)

    def _assign(self, o):
        self.c = o.c
        self._packed = o._packed

    def __str__(self):
        from .textfmt import format_univariate

        return format_univariate(list(self.c), self.parent.var)


# ----------------------------------------------------------------------
ZZ = intern(IntegerRing())
QQ = intern(RationalField())


def make_ring(kind, **params) -> Ring:
    """Construct (or fetch) the ring handle for ``kind`` and ``params``.

    kind: a RingKind or its string name.
      IntegerResidue: n
      PolynomialRing: base, var
      MPolyRing:      base, vars
      ResidueRing:    base (ZZ or a PolynomialRing), modulus
      FractionField:  base
      FiniteField:    p, k, optional var
      MatrixSpace:    base, rows, cols
      NumberField:    poly (monic integral), optional var
    """
    if isinstance(kind, str):
        kind = RingKind(kind)
    if kind is RingKind.INTEGERS:
        return ZZ
    if kind is RingKind.RATIONALS:
        return QQ
    if kind is RingKind.INTEGER_RESIDUE:
        return intern(IntegerModRing(params["n"]))
    if kind is RingKind.POLYNOMIAL_RING:
        from .poly.dense import PolynomialRing

        return intern(PolynomialRing(params["base"], params.get("var", "x")))
    if kind is RingKind.MPOLY_RING:
        from .poly.sparse import MPolyRing

        return intern(MPolyRing(params["base"], tuple(params["vars"])))
    if kind is RingKind.RESIDUE_RING:
        base = params["base"]
        if isinstance(base, IntegerRing):
            return intern(IntegerModRing(int(params["modulus"])))
        return intern(ResidueRing(base, params["modulus"]))
    if kind is RingKind.FRACTION_FIELD:
        return intern(FractionField(params["base"]))
    if kind is RingKind.FINITE_FIELD:
        return intern(FiniteField(params["p"], params["k"], params.get("var", "x")))
    if kind is RingKind.MATRIX_SPACE:
        from .matrices import MatrixSpace

        return intern(MatrixSpace(params["base"], params["rows"], params["cols"]))
    if kind is RingKind.NUMBER_FIELD:
        from .numberfield import NumberField

        return intern(NumberField(params["poly"], params.get("var", "a")))
    raise InvalidParameter(f"unknown ring kind {kind}")


def coerce(handle: Ring, value):
    return handle(value)
