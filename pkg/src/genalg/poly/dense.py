"""Dense univariate polynomials over an arbitrary ring handle."""
from __future__ import annotations

from ..errors import (
    DivisionByZero,
    ImpossibleInverse,
    InexactDivision,
    InvalidParameter,
    NotInvertible,
)
from ..rings import (
    FiniteField,
    IntegerModRing,
    Ring,
    RingElement,
    RingKind,
)
from ..textfmt import format_univariate


class PolynomialRing(Ring):
    kind = RingKind.POLYNOMIAL_RING

    def __init__(self, base: Ring, var: str = "x"):
        if not isinstance(base, Ring):
            raise InvalidParameter("base must be a ring handle")
        self.base = base
        self.var = var
        self.is_domain = base.is_domain
        self._freeze()

    def _key(self):
        return ("Poly", self.base._key(), self.var)

    def __str__(self):
        return f"{self.base}[{self.var}]"

    __repr__ = __str__

    def _from_int(self, n):
        return DensePoly(self, [self.base._from_int(n)])

    def _from_base(self, b):
        return DensePoly(self, [b])

    def _from_other(self, value):
        if isinstance(value, (list, tuple)):
            return DensePoly(self, [self.base(c) for c in value])
        return super()._from_other(value)

    def from_coeffs(self, coeffs) -> "DensePoly":
        """Build from low-to-high coefficients (ints or base elements)."""
        return DensePoly(self, [self.base(c) for c in coeffs])

    def gen(self) -> "DensePoly":
        return DensePoly(self, [self.base.zero(), self.base.one()])

    def _parse_names(self):
        names = super()._parse_names()
        names[self.var] = self.gen()
        return names

    @property
    def characteristic(self):
        return self.base.characteristic

    def canonical_unit(self, a):
        if a.is_zero():
            return self.one()
        return self._from_base(self.base.canonical_unit(a.lc()))

    def gcd(self, a, b):
        return a.gcd(b)

    def _dot(self, xs, ys):
        # accumulate raw coefficient products per degree, one base _dot each
        R = self.base
        buckets: dict[int, tuple[list, list]] = {}
        for x, y in zip(xs, ys):
            for i, a in enumerate(x.coeffs):
                for j, b in enumerate(y.coeffs):
                    l = buckets.setdefault(i + j, ([], []))
                    l[0].append(a)
                    l[1].append(b)
        if not buckets:
            return self.zero()
        n = max(buckets) + 1
        out = [R.zero()] * n
        for k, (u, v) in buckets.items():
            out[k] = R._dot(u, v)
        return DensePoly(self, out)


class DensePoly(RingElement):
    __slots__ = ("coeffs",)

    def __init__(self, parent: PolynomialRing, coeffs: list, trimmed: bool = False):
        self.parent = parent
        if not trimmed:
            while coeffs and coeffs[-1].is_zero():
                coeffs.pop()
        self.coeffs = coeffs

    # -- basic queries --------------------------------------------------
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def lc(self):
        if not self.coeffs:
            return self.parent.base.zero()
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.parent.base.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def _is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def _eq(self, o):
        return len(self.coeffs) == len(o.coeffs) and all(
            a._eq(b) for a, b in zip(self.coeffs, o.coeffs)
        )

    def __hash__(self):
        return hash(tuple(hash(c) for c in self.coeffs))

    def __str__(self):
        return format_univariate(self.coeffs, self.parent.var)

    def _new(self, coeffs, trimmed=False):
        return DensePoly(self.parent, coeffs, trimmed)

    # -- arithmetic -----------------------------------------------------
    def _add(self, o):
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i]._add(c)
        return self._new(out)

    def _sub(self, o):
        a, b = self.coeffs, o.coeffs
        out = list(a)
        for i, c in enumerate(b):
            if i < len(out):
                out[i] = out[i]._sub(c)
            else:
                out.append(c._neg())
        return self._new(out)

    def _neg(self):
        return self._new([c._neg() for c in self.coeffs], True)

    def _mul(self, o):
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return self.parent.zero()
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return o.scale(a[0])
        dot = self.parent.base._dot
        la, lb = len(a), len(b)
        rb = b[::-1]
        out = []
        for k in range(la + lb - 1):
            lo = max(0, k - lb + 1)
            hi = min(k, la - 1)
            # sum a[i] * b[k-i], i = lo..hi
            out.append(dot(a[lo : hi + 1], rb[lb - 1 - k + lo : lb - k + hi]))
        return self._new(out)

    def scale(self, c):
        """Multiply by a base-ring element."""
        if c.is_zero():
            return self.parent.zero()
        return self._new([x._mul(c) for x in self.coeffs])

    def shift(self, k: int):
        """Multiply by var^k."""
        if not self.coeffs:
            return self
        z = self.parent.base.zero()
        return self._new([z] * k + list(self.coeffs), True)

    def _inverse(self):
        if len(self.coeffs) == 1:
            return self._new([self.coeffs[0].inverse()])
        raise NotInvertible(f"{self} is not a unit")

    def _divexact(self, o):
        if len(o.coeffs) == 1:
            c = o.coeffs[0]
            return self._new([x.divexact(c) for x in self.coeffs])
        q, r = self._divrem_general(o, exact=True)
        if r.coeffs:
            raise InexactDivision(f"{o} does not divide {self}")
        return q

    def _divrem_general(self, g, exact=False):
        """Long division.  With a unit leading coefficient the quotient uses
        its inverse; otherwise (only when ``exact``) coefficient divexact."""
        if not g.coeffs:
            raise DivisionByZero("polynomial division by zero")
        R = self.parent.base
        lc = g.coeffs[-1]
        inv = None
        if lc.is_one():
            inv = lc
        else:
            try:
                inv = lc.inverse()
            except NotInvertible:
                if not exact:
                    raise
        r = list(self.coeffs)
        dg = len(g.coeffs) - 1
        if len(r) <= dg:
            return self.parent.zero(), self
        q = [R.zero()] * (len(r) - dg)
        gc = g.coeffs
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i]
            if c.is_zero():
                continue
            c = c._mul(inv) if inv is not None else c.divexact(lc)
            q[i - dg] = c
            off = i - dg
            for j in range(dg):
                if not gc[j].is_zero():
                    r[off + j] = r[off + j]._sub(c._mul(gc[j]))
            r[i] = R.zero()
        return self._new(q), self._new(r[:dg])

    def divrem(self, g):
        """(q, r) with self = q*g + r and deg r < deg g.  lc(g) must be a unit."""
        return self._divrem_general(g)

    def rem(self, g):
        if len(self.coeffs) < len(g.coeffs):
            return self
        return self._divrem_general(g)[1]

    def __floordiv__(self, g):
        return self.divrem(self.parent(g))[0]

    def __mod__(self, g):
        return self.rem(self.parent(g))

    def prem(self, g):
        """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, division free."""
        return self.pseudo_divrem(g)[1]

    def pseudo_divrem(self, g):
        if not g.coeffs:
            raise DivisionByZero("pseudo-division by zero")
        dg = g.degree()
        df = self.degree()
        P = self.parent
        if df < dg:
            return P.zero(), self
        lc = g.lc()
        gc = g.coeffs
        r = list(self.coeffs)
        R = P.base
        q = [R.zero()] * (df - dg + 1)
        for i in range(df, dg - 1, -1):
            c = r[i]
            # multiply everything by lc, then subtract c*g*x^(i-dg)
            q = [x._mul(lc) for x in q]
            q[i - dg] = c
            r = [x._mul(lc) for x in r[:i]]
            off = i - dg
            if not c.is_zero():
                for j in range(dg):
                    r[off + j] = r[off + j]._sub(c._mul(gc[j]))
        return self._new(q), self._new(r)

    def powmod(self, e: int, m):
        result = self.parent.one()
        base = self.rem(m)
        while e:
            if e & 1:
                result = result._mul(base).rem(m)
            e >>= 1
            if e:
                base = base._mul(base).rem(m)
        return result.rem(m)

    # -- evaluation and calculus ---------------------------------------
    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """Horner evaluation at x (any value accepting + and * with base elements)."""
        if isinstance(x, RingElement):
            S = x.parent
            acc = S.zero()
            for c in reversed(self.coeffs):
                acc = acc * x + S(c)
            return acc
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return self._new([c._mul(self.parent.base._from_int(i)) for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        return self.scale(self.lc().inverse())

    # -- gcd and friends -------------------------------------------------
    def content(self):
        R = self.parent.base
        g = R.zero()
        for c in self.coeffs:
            g = R.gcd(g, c)
            if g.is_one():
                break
        if not g.is_zero():
            g = g.divexact(R.canonical_unit(g))
        return g

    def primitive_part(self):
        if not self.coeffs:
            return self
        c = self.content() * self.parent.base.canonical_unit(self.lc())
        return self._new([x.divexact(c) for x in self.coeffs], True)

    def canonical(self):
        if not self.coeffs:
            return self
        u = self.parent.base.canonical_unit(self.lc())
        if u.is_one():
            return self
        return self._new([x.divexact(u) for x in self.coeffs], True)

    def gcd(self, g):
        """Normalised gcd: monic over fields, primitive with canonical lc otherwise."""
        g = self.parent(g)
        R = self.parent.base
        if R.is_field:
            a, b = self, g
            while b.coeffs:
                a, b = b, a.rem(b)
            return a.monic() if a.coeffs else a
        if not R.is_domain:
            raise NotImplementedError(f"gcd over {R}")
        if not self.coeffs:
            return g.canonical()
        if not g.coeffs:
            return self.canonical()
        c = R.gcd(self.content(), g.content())
        a, b = self.primitive_part(), g.primitive_part()
        if a.degree() < b.degree():
            a, b = b, a
        for r in _subresultant_prs(a, b):
            last = r
        h = last.primitive_part() if last.degree() > 0 else self.parent.one()
        return h.scale(c).canonical()

    def xgcd(self, g):
        """(d, s, t) with s*self + t*g = d; d is monic.  Field coefficients only."""
        P = self.parent
        r0, r1 = self, P(g)
        s0, s1 = P.one(), P.zero()
        t0, t1 = P.zero(), P.one()
        while r1.coeffs:
            q, r = r0.divrem(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0.coeffs:
            return r0, s0, t0
        u = r0.lc().inverse()
        return r0.scale(u), s0.scale(u), t0.scale(u)

    def resultant(self, g):
        return resultant(self, g)

    def _assign(self, o):
        self.coeffs = o.coeffs


def _subresultant_prs(a, b):
    """Yield the subresultant remainder sequence a, b, ... (domain coefficients)."""
    yield a
    g = h = a.parent.base.one()
    while b.coeffs:
        yield b
        delta = a.degree() - b.degree()
        r = a.prem(b)
        a = b
        d = g * h**delta
        b = r._new([c.divexact(d) for c in r.coeffs], True)
        g = a.lc()
        h = g if delta == 1 else (g**delta).divexact(h ** (delta - 1)) if delta else h


# ----------------------------------------------------------------------
# Resultants
# ----------------------------------------------------------------------
def resultant(f: DensePoly, g: DensePoly):
    """Resultant of univariate polynomials over a commutative ring.

    Fields use the Euclidean remainder sequence; other rings use the
    subresultant PRS.  If a zero divisor blocks a needed division the
    determinant of the Sylvester matrix is computed division free.
    """
    P = f.parent
    g = P(g)
    R = P.base
    if not f.coeffs or not g.coeffs:
        return R.zero()
    if f.degree() == 0:
        return f.lc() ** g.degree()
    if g.degree() == 0:
        return g.lc() ** f.degree()
    try:
        if R.is_field:
            return _resultant_euclid(f, g)
        return resultant_subresultant(f, g)
    except ImpossibleInverse:
        return resultant_sylvester(f, g)


def _resultant_euclid(a, b):
    R = a.parent.base
    res = R.one()
    while True:
        m, n = a.degree(), b.degree()
        if n == 0:
            return res * b.lc() ** m
        r = a.rem(b)
        if not r.coeffs:
            return R.zero()
        k = r.degree()
        t = b.lc() ** (m - k)
        if (m * n) & 1:
            t = -t
        res = res * t
        a, b = b, r


def resultant_subresultant(A, B):
    """Collins/Brown subresultant resultant (no content extraction).

    Over rings with zero divisors every division must be by a unit;
    otherwise ImpossibleInverse is raised.
    """
    R = A.parent.base
    domain = R.is_domain
    s = R.one()
    if A.degree() < B.degree():
        A, B = B, A
        if A.degree() & 1 and B.degree() & 1:
            s = -s
    g = h = R.one()
    while True:
        da, db = A.degree(), B.degree()
        delta = da - db
        if da & 1 and db & 1:
            s = -s
        if not domain:
            B.lc().inverse()
        r = A.prem(B)
        A = B
        d = g * h**delta
        B = r._new([c.divexact(d) for c in r.coeffs], True)
        g = A.lc()
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = (g**delta).divexact(h ** (delta - 1))
        if B.degree() <= 0:
            break
    if not B.coeffs:
        return R.zero()
    da = A.degree()
    if da == 1:
        h = B.lc()
    else:
        h = (B.lc() ** da).divexact(h ** (da - 1))
    return s * h


def sylvester_matrix(f, g):
    from ..matrices import MatrixSpace

    m, n = f.degree(), g.degree()
    R = f.parent.base
    N = m + n
    z = R.zero()
    rows = []
    fc = f.coeffs[::-1]
    gc = g.coeffs[::-1]
    for i in range(n):
        rows.append([z] * i + fc + [z] * (N - m - 1 - i))
    for i in range(m):
        rows.append([z] * i + gc + [z] * (N - n - 1 - i))
    return MatrixSpace(R, N, N).from_rows(rows)


def resultant_sylvester(f, g):
    """Division-free resultant: Berkowitz determinant of the Sylvester matrix."""
    from ..matrices import det_berkowitz

    f, g = f, f.parent(g)
    R = f.parent.base
    if not f.coeffs or not g.coeffs:
        return R.zero()
    if f.degree() == 0:
        return f.lc() ** g.degree()
    if g.degree() == 0:
        return g.lc() ** f.degree()
    return det_berkowitz(sylvester_matrix(f, g))


def is_irreducible_over_finite(m: DensePoly) -> bool:
    from ..rings import _poly_irreducible_over_finite

    if not isinstance(m.parent.base, (IntegerModRing, FiniteField)):
        raise InvalidParameter("irreducibility test needs a finite base field")
    return _poly_irreducible_over_finite(m.monic())
