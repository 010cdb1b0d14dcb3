"""Midpoint-radius ball arithmetic, certified polynomial roots, conjugates
and a torsion test for number field elements.

A real ball is m*2^e +/- r*2^f: the midpoint mantissa has at most p bits
(the context precision) and the radius mantissa at most 30 bits, always
rounded upward.  Every operation returns a ball containing the exact
result for all inputs drawn from the argument balls.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt

import mpmath

from .errors import (
    ContainsNegative,
    ContainsZero,
    DivisionByZero,
    InvalidParameter,
    NotSquarefree,
    PrecisionExhausted,
    TorsionCertificationFailed,
)
from .intarith import euler_phi

RAD_BITS = 30
MAX_PRECISION = 1 << 20

Dyadic = tuple[int, int]  # m * 2^e

_ZERO: Dyadic = (0, 0)


def _dy_add(a: Dyadic, b: Dyadic) -> Dyadic:
    (m1, e1), (m2, e2) = a, b
    if not m1:
        return b
    if not m2:
        return a
    e = min(e1, e2)
    return ((m1 << (e1 - e)) + (m2 << (e2 - e)), e)


def _dy_neg(a: Dyadic) -> Dyadic:
    return (-a[0], a[1])


def _dy_mul(a: Dyadic, b: Dyadic) -> Dyadic:
    return (a[0] * b[0], a[1] + b[1])


def _dy_abs(a: Dyadic) -> Dyadic:
    return (abs(a[0]), a[1])


def _dy_frac(a: Dyadic) -> Fraction:
    m, e = a
    return Fraction(m << e) if e >= 0 else Fraction(m, 1 << -e)


def _dy_cmp(a: Dyadic, b: Dyadic) -> int:
    d = _dy_add(a, _dy_neg(b))[0]
    return (d > 0) - (d < 0)


def _round_mid(a: Dyadic, prec: int) -> tuple[Dyadic, Dyadic]:
    """Round to prec bits (nearest); returns (value, error bound)."""
    m, e = a
    bits = abs(m).bit_length()
    if bits <= prec:
        return a, _ZERO
    shift = bits - prec
    q = (m + (1 << (shift - 1))) >> shift
    return (q, e + shift), (1, e + shift - 1)


def _rad_up(a: Dyadic) -> Dyadic:
    m, e = a
    if m < 0:
        raise AssertionError("negative radius")
    if m == 0:
        return _ZERO
    bits = m.bit_length()
    if bits <= RAD_BITS:
        return a
    shift = bits - RAD_BITS
    return (((m - 1) >> shift) + 1, e + shift)


def _frac_up(q: Fraction) -> Dyadic:
    """Dyadic upper bound of a nonnegative rational with a 30-bit mantissa."""
    if q <= 0:
        return _ZERO
    n, d = q.numerator, q.denominator
    s = RAD_BITS + 2 + d.bit_length() - n.bit_length()
    if s >= 0:
        m = -((-n << s) // d)
    else:
        m = -(-n // (d << -s))
    return _rad_up((m, -s))


def _frac_to_dyadic(q: Fraction, prec: int) -> tuple[Dyadic, Dyadic]:
    """Nearest p-bit dyadic to q and an error bound."""
    n, d = q.numerator, q.denominator
    if d & (d - 1) == 0:
        return _round_mid((n, -(d.bit_length() - 1)), prec)
    s = prec + d.bit_length() - abs(n).bit_length() + 2
    if s >= 0:
        m = (n << s) // d
    else:
        m = n // (d << -s)
    mid, err = _round_mid((m, -s), prec)
    return mid, _dy_add(err, (1, -s))


def _sqrt_floor(a: Dyadic, prec: int) -> Dyadic:
    m, e = a
    if m <= 0:
        return _ZERO
    t = max(0, 2 * prec + 4 - m.bit_length())
    if (e - t) & 1:
        t += 1
    return (isqrt(m << t), (e - t) // 2)


def _sqrt_ceil(a: Dyadic, prec: int) -> Dyadic:
    m, e = a
    if m <= 0:
        return _ZERO
    t = max(0, 2 * prec + 4 - m.bit_length())
    if (e - t) & 1:
        t += 1
    s = isqrt(m << t)
    if s * s != m << t:
        s += 1
    return (s, (e - t) // 2)


@dataclass(frozen=True)
class BallContext:
    precision: int = 53

    def __post_init__(self):
        if self.precision < 2:
            raise InvalidParameter("precision must be at least 2 bits")

    def __call__(self, x, rad=0) -> "RealBall":
        return RealBall.from_value(x, self.precision, rad)

    def box(self, re, im=0) -> "ComplexBox":
        return ComplexBox(self(re), self(im))


class RealBall:
    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid: Dyadic, rad: Dyadic, prec: int):
        self.mid = mid
        self.rad = _rad_up(rad)
        self.prec = prec

    @classmethod
    def from_value(cls, x, prec: int, rad=0) -> "RealBall":
        if isinstance(x, RealBall):
            return x
        if isinstance(x, tuple):
            mid, err = _round_mid(x, prec)
        else:
            q = Fraction(x) if not isinstance(x, float) else Fraction(x)
            mid, err = _frac_to_dyadic(q, prec)
        r = _frac_up(Fraction(rad)) if rad else _ZERO
        return cls(mid, _dy_add(err, r), prec)

    @classmethod
    def from_interval(cls, lo: Dyadic, hi: Dyadic, prec: int) -> "RealBall":
        s = _dy_add(lo, hi)
        mid, err = _round_mid((s[0], s[1] - 1), prec)
        w = _dy_add(hi, _dy_neg(lo))
        return cls(mid, _dy_add((w[0], w[1] - 1), err), prec)

    # -- inspection -----------------------------------------------------
    def mid_fraction(self) -> Fraction:
        return _dy_frac(self.mid)

    def rad_fraction(self) -> Fraction:
        return _dy_frac(self.rad)

    def lower(self) -> Fraction:
        return _dy_frac(_dy_add(self.mid, _dy_neg(self.rad)))

    def upper(self) -> Fraction:
        return _dy_frac(_dy_add(self.mid, self.rad))

    def contains(self, x) -> bool:
        x = Fraction(x)
        return abs(x - self.mid_fraction()) <= self.rad_fraction()

    def contains_zero(self) -> bool:
        return _dy_cmp(_dy_abs(self.mid), self.rad) <= 0

    def gt(self, c) -> bool:
        """Every point of the ball exceeds c."""
        return self.lower() > Fraction(c)

    def lt(self, c) -> bool:
        return self.upper() < Fraction(c)

    def __repr__(self):
        return f"RealBall({self})"

    def __str__(self):
        digits = math.ceil(self.prec * math.log10(2))
        with localcontext() as ctx:
            ctx.prec = digits + 5
            m, e = self.mid
            mid = Decimal(m) * Decimal(2) ** e
            ctx.prec = digits
            mid = +mid
            rm, re = self.rad
            rad = Decimal(rm) * Decimal(2) ** re
            ctx.prec = 3
            rad = +rad
        return f"[{mid} +/- {rad}]"

    # -- arithmetic -----------------------------------------------------
    def _lift(self, o) -> "RealBall":
        return o if isinstance(o, RealBall) else RealBall.from_value(o, self.prec)

    def __neg__(self):
        return RealBall(_dy_neg(self.mid), self.rad, self.prec)

    def __add__(self, o):
        o = self._lift(o)
        mid, err = _round_mid(_dy_add(self.mid, o.mid), self.prec)
        return RealBall(mid, _dy_add(_dy_add(self.rad, o.rad), err), self.prec)

    __radd__ = __add__

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        mid, err = _round_mid(_dy_mul(self.mid, o.mid), self.prec)
        r = _dy_add(_dy_mul(_dy_abs(self.mid), o.rad), _dy_mul(_dy_abs(o.mid), self.rad))
        r = _dy_add(r, _dy_mul(self.rad, o.rad))
        return RealBall(mid, _dy_add(r, err), self.prec)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._lift(o)
        if o.contains_zero():
            raise ContainsZero("division by a ball containing zero")
        (m1, e1), (m2, e2) = self.mid, o.mid
        s = self.prec + abs(m2).bit_length() - abs(m1).bit_length() + 2
        s = max(s, 0)
        q = (abs(m1) << s) // abs(m2)
        if (m1 < 0) != (m2 < 0):
            q = -q
        mid, err = _round_mid((q, e1 - s - e2), self.prec)
        err = _dy_add(err, (1, e1 - s - e2))
        num = _dy_add(_dy_mul(_dy_abs(self.mid), o.rad), _dy_mul(_dy_abs(o.mid), self.rad))
        den = _dy_mul(_dy_abs(o.mid), _dy_add(_dy_abs(o.mid), _dy_neg(o.rad)))
        r = _frac_up(_dy_frac(num) / _dy_frac(den)) if num[0] else _ZERO
        return RealBall(mid, _dy_add(r, err), self.prec)

    def __rtruediv__(self, o):
        return self._lift(o) / self

    def __pow__(self, k: int):
        k = int(k)
        if k < 0:
            return RealBall.from_value(1, self.prec) / (self ** (-k))
        result = RealBall.from_value(1, self.prec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base.sqr()
        return result

    def sqr(self) -> "RealBall":
        """x^2 as a ball that never dips below zero."""
        a = _dy_abs(self.mid)
        lo = _dy_add(a, _dy_neg(self.rad))
        hi = _dy_add(a, self.rad)
        lo = _ZERO if lo[0] <= 0 else _dy_mul(lo, lo)
        return RealBall.from_interval(lo, _dy_mul(hi, hi), self.prec)

    def __abs__(self):
        if _dy_cmp(self.mid, self.rad) >= 0:
            return self
        if _dy_cmp(_dy_neg(self.mid), self.rad) >= 0:
            return -self
        return RealBall.from_interval(_ZERO, _dy_add(_dy_abs(self.mid), self.rad), self.prec)

    def sqrt(self) -> "RealBall":
        lo = _dy_add(self.mid, _dy_neg(self.rad))
        if lo[0] < 0:
            raise ContainsNegative("square root of a ball with negative points")
        return self._sqrt_clamped()

    def _sqrt_clamped(self) -> "RealBall":
        lo = _dy_add(self.mid, _dy_neg(self.rad))
        hi = _dy_add(self.mid, self.rad)
        p = self.prec
        return RealBall.from_interval(_sqrt_floor(lo, p), _sqrt_ceil(hi, p), p)


class ComplexBox:
    __slots__ = ("re", "im")

    def __init__(self, re: RealBall, im: RealBall):
        self.re = re
        self.im = im

    @property
    def prec(self) -> int:
        return self.re.prec

    def _lift(self, o) -> "ComplexBox":
        if isinstance(o, ComplexBox):
            return o
        return ComplexBox(self.re._lift(o), RealBall.from_value(0, self.prec))

    def __add__(self, o):
        o = self._lift(o)
        return ComplexBox(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexBox(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __mul__(self, o):
        o = self._lift(o)
        return ComplexBox(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def abs_sq(self) -> RealBall:
        return self.re.sqr() + self.im.sqr()

    def __abs__(self) -> RealBall:
        return self.abs_sq()._sqrt_clamped()

    def contains(self, re, im=0) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    def diameter(self) -> Fraction:
        """Upper bound on the diameter: 2*(r_re + r_im)."""
        return 2 * (self.re.rad_fraction() + self.im.rad_fraction())

    def is_real(self) -> bool:
        return self.im.mid == _ZERO and self.im.rad == _ZERO

    def __repr__(self):
        return f"ComplexBox({self})"

    def __str__(self):
        return f"{self.re} + {self.im}*I"


def poly_eval(coeffs, x):
    """Horner evaluation; coefficients low degree first (exact or balls)."""
    acc = None
    for c in reversed(list(coeffs)):
        if acc is None:
            acc = x._lift(c) if not isinstance(c, (RealBall, ComplexBox)) else c
            if isinstance(x, ComplexBox) and isinstance(acc, RealBall):
                acc = x._lift(acc)
        else:
            acc = acc * x + c
    if acc is None:
        return x._lift(0)
    return acc


# ----------------------------------------------------------------------
# Roots
# ----------------------------------------------------------------------


def _rational_coeffs(f) -> list[Fraction]:
    out = []
    for c in f.coeffs:
        out.append(c.to_fraction() if hasattr(c, "to_fraction") else Fraction(int(c)))
    return out


def _check_squarefree(f):
    from .poly.dense import PolynomialRing
    from .rings import QQ

    P = PolynomialRing(QQ, "x")
    g = P.from_coeffs(_rational_coeffs(f))
    if g.gcd(g.derivative()).degree() > 0:
        raise NotSquarefree("polynomial has repeated roots")


def _aberth(coeffs: list[Fraction], prec: int, init=None, maxiter: int = 500):
    n = len(coeffs) - 1
    with mpmath.workprec(prec + 10):
        c = [mpmath.mpf(x.numerator) / x.denominator for x in reversed(coeffs)]
        if init is None:
            lead = abs(c[0])
            R = 1 + max(abs(x) / lead for x in c[1:])
            center = -c[1] / (n * c[0])
            z = [
                center + R * mpmath.expjpi(mpmath.mpf(2 * k + 0.5) / n)
                for k in range(n)
            ]
        else:
            z = [mpmath.mpc(*w) for w in init]
        eps = mpmath.mpf(2) ** (-prec)
        for _ in range(maxiter):
            worst = 0
            for k in range(n):
                f, df = mpmath.polyval(c, z[k], derivative=True)
                if f == 0:
                    continue
                if df == 0:
                    z[k] += eps
                    worst = 1
                    continue
                w = f / df
                s = mpmath.fsum(1 / (z[k] - z[j]) for j in range(n) if j != k)
                step = w / (1 - w * s)
                z[k] -= step
                rel = abs(step) / max(1, abs(z[k]))
                if rel > worst:
                    worst = rel
            if worst < eps:
                break
        return [(mpmath.mpf(w.real), mpmath.mpf(w.imag)) for w in z]


def _mp_to_dyadic(x, prec: int) -> Dyadic:
    return _round_mid(_mpf_dyadic(x), prec)[0]


def _mpf_dyadic(x) -> Dyadic:
    sign, man, exp, _ = x._mpf_
    if not man:
        return _ZERO
    return (-int(man) if sign else int(man), int(exp))


def _certify(coeffs, approx, prec):
    """Inclusion discs (center, radius as Fraction) or None if uncertified."""
    n = len(coeffs) - 1
    dcoeffs = [i * c for i, c in enumerate(coeffs)][1:]
    out = []
    for re, im in approx:
        zr, zi = _mp_to_dyadic(re, prec), _mp_to_dyadic(im, prec)
        z = ComplexBox(RealBall(zr, _ZERO, prec), RealBall(zi, _ZERO, prec))
        fz = abs(poly_eval(coeffs, z))
        dfz = abs(poly_eval(dcoeffs, z))
        if dfz.lower() <= 0:
            return None
        rho = n * fz.upper() / dfz.lower()
        out.append((zr, zi, rho))
    for i in range(n):
        for j in range(i + 1, n):
            if not _discs_disjoint(out[i], out[j]):
                return None
    return out


def _discs_disjoint(a, b, mirror_a: bool = False) -> bool:
    (ar, ai, ra), (br, bi, rb) = a, b
    dr = _dy_frac(ar) - _dy_frac(br)
    ai_f = _dy_frac(ai)
    di = (-ai_f if mirror_a else ai_f) - _dy_frac(bi)
    return dr * dr + di * di > (ra + rb) ** 2


def ball_roots(f, p: int) -> list[ComplexBox]:
    """Certified boxes of diameter <= 2^-p, one per root of squarefree f.

    Real roots are returned with an exactly zero imaginary part once the
    disc layout proves them real.
    """
    _check_squarefree(f)
    coeffs = _rational_coeffs(f)
    n = len(coeffs) - 1
    if n < 1:
        return []
    target = Fraction(1, 1 << p)
    wp = max(64, p) + 2 * n.bit_length() + 8
    approx = None
    while wp <= MAX_PRECISION:
        approx = _aberth(coeffs, wp, init=approx)
        discs = _certify(coeffs, approx, wp)
        if discs is not None and all(4 * rho <= target for _, _, rho in discs):
            return _boxes(discs, wp)
        wp *= 2
    raise PrecisionExhausted("root isolation did not converge")


def _boxes(discs, prec) -> list[ComplexBox]:
    n = len(discs)
    out = []
    for i, (zr, zi, rho) in enumerate(discs):
        r = _frac_up(rho)
        real = _dy_frac(zi) == 0 or (
            abs(_dy_frac(zi)) <= rho
            and all(_discs_disjoint(discs[i], discs[j], mirror_a=True) for j in range(n) if j != i)
        )
        re = RealBall(zr, r, prec)
        im = RealBall(_ZERO, _ZERO, prec) if real else RealBall(zi, r, prec)
        out.append(ComplexBox(re, im))
    out.sort(key=lambda b: (not b.is_real(), b.re.mid_fraction(), b.im.mid_fraction()))
    return out


def conjugates(alpha, p: int) -> list[ComplexBox]:
    """Boxes for all embeddings of alpha, each of diameter <= 2^-p.

    Works at p' = max(64, p) and doubles p' until the evaluated boxes are
    small enough.
    """
    K = alpha.parent
    f = K.defining_poly()
    target = Fraction(1, 1 << p)
    coeffs = alpha.coeffs()
    wp = max(64, p)
    while wp <= MAX_PRECISION:
        roots = ball_roots(f, wp)
        vals = [poly_eval(coeffs, z) for z in roots]
        if all(v.diameter() <= target for v in vals):
            return vals
        wp *= 2
    raise PrecisionExhausted("conjugates did not reach the requested accuracy")


# ----------------------------------------------------------------------
# Torsion
# ----------------------------------------------------------------------


def dobrowolski_threshold(d: int) -> float:
    """1 + log(d) / (6 d^2)."""
    return 1 + math.log(d) / (6 * d * d)


def _threshold_lower(d: int) -> Fraction:
    """A rational lower bound for the threshold, safe for exact comparison."""
    with mpmath.workprec(128):
        v = 1 + mpmath.log(d) / (6 * d * d)
        v = v - mpmath.mpf(2) ** -100
    return _dy_frac(_mpf_dyadic(v))


@dataclass(frozen=True)
class TorsionResult:
    is_torsion: bool
    order: int | None = None
    precision: int = 0

    def __str__(self):
        return f"torsion, order {self.order}" if self.is_torsion else "not torsion"


def _exact_order(alpha, d: int) -> int | None:
    """Least k with alpha^k = 1 among k with phi(k) | d."""
    one = alpha.parent.one()
    power = one
    for k in range(1, 2 * d * d + 3):
        power = power * alpha
        if d % euler_phi(k) == 0 and power == one:
            return k
    return None


def _is_integral_unit(alpha) -> bool:
    N = alpha.norm()
    if abs(N) != 1:
        return False
    if alpha.den == 1:
        return True
    from .matrices import MatrixSpace, charpoly_berkowitz
    from .numberfield import multiplication_matrix
    from .rings import QQ

    rows = multiplication_matrix(alpha)
    M = MatrixSpace(QQ, len(rows), len(rows)).from_rows([[QQ(x) for x in r] for r in rows])
    return all(c.den == 1 for c in charpoly_berkowitz(M).coeffs)


def is_torsion(alpha, start_precision: int = 64) -> TorsionResult:
    """Decide whether alpha is a root of unity with conjugate balls.

    Not torsion as soon as a conjugate's absolute value is certified above
    1; torsion once all are certified below 1 + log(d)/(6d^2), which the
    Dobrowolski bound allows for algebraic integers of norm +/-1.  The
    order is then found exactly.
    """
    if alpha.is_zero():
        raise DivisionByZero("zero is not a unit")
    K = alpha.parent
    d = K.d
    if d == 1 or alpha.is_rational():
        q = alpha.coeffs()[0]
        if q == 1:
            return TorsionResult(True, 1)
        if q == -1:
            return TorsionResult(True, 2)
        return TorsionResult(False)
    if not _is_integral_unit(alpha):
        return TorsionResult(False)
    limit = _threshold_lower(d)
    p = start_precision
    while p <= MAX_PRECISION:
        absvals = [abs(b) for b in conjugates(alpha, p)]
        if any(b.gt(1) for b in absvals):
            return TorsionResult(False, precision=p)
        if all(b.lt(limit) for b in absvals):
            k = _exact_order(alpha, d)
            if k is None:
                raise TorsionCertificationFailed("ball test says torsion but no order verifies")
            return TorsionResult(True, k, precision=p)
        p *= 2
    raise PrecisionExhausted("torsion test did not settle")
