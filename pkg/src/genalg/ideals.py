"""Two-generator ideal arithmetic in orders of number fields.

An integral ideal is kept as <a, alpha> with a a positive integer and alpha
an order element, together with the prime set S it is normal for: at every
prime Q above a prime of S the valuation of alpha equals that of the ideal.
Products and powers then come straight from the generators, and norms
reduce to one gcd.  Hermite normal forms are only used as a canonical form
for comparisons and tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from . import gfpoly
from .errors import (
    DivisionByZero,
    IndexDivisor,
    InvalidParameter,
    RandomSearchExhausted,
)
from .intarith import factor_small, is_prime, lcm, xgcd
from .numberfield import NFElem, NumberField, multiplication_matrix
from .prng import SplitMix64

# ----------------------------------------------------------------------
# Orders
# ----------------------------------------------------------------------


def _mat_inverse(B: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(B)
    M = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(B)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise InvalidParameter("basis matrix is singular")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def _det_fraction(B: list[list[Fraction]]) -> Fraction:
    n = len(B)
    M = [list(r) for r in B]
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


class Order:
    """A full-rank subring of the number field with an explicit Z-basis.

    ``basis`` rows give omega_1..omega_n in power-basis coordinates; the
    default is the equation order Z[theta].  ``is_maximal`` is taken on
    trust from the caller.
    """

    def __init__(self, field: NumberField, basis=None, is_maximal: bool = False):
        self.field = field
        n = self.n = field.d
        if basis is None:
            self.equation_order = True
            basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        else:
            basis = [[Fraction(x) for x in row] for row in basis]
            self.equation_order = all(
                basis[i][j] == (i == j) for i in range(n) for j in range(n)
            )
        if len(basis) != n or any(len(r) != n for r in basis):
            raise InvalidParameter("basis matrix must be n x n")
        if basis[0] != [Fraction(int(j == 0)) for j in range(n)]:
            raise InvalidParameter("first basis element must be 1")
        self.basis_matrix = basis
        self.basis_inverse = _mat_inverse(basis)
        self.is_maximal = is_maximal
        self.basis = [field.from_coeffs(row) for row in basis]
        if not self.equation_order:
            for x in self.basis:
                for y in self.basis:
                    if not self.is_integral(x * y):
                        raise InvalidParameter("basis is not closed under multiplication")

    def __eq__(self, o):
        return self is o or (
            isinstance(o, Order) and self.field is o.field and self.basis_matrix == o.basis_matrix
        )

    def __hash__(self):
        return hash((self.field, tuple(map(tuple, self.basis_matrix))))

    def __repr__(self):
        kind = "equation order" if self.equation_order else "order"
        return f"<{kind} of {self.field}>"

    def coords(self, x: NFElem) -> list[Fraction]:
        if self.equation_order:
            return x.coeffs()
        c = x.coeffs()
        Bi = self.basis_inverse
        return [sum(c[i] * Bi[i][j] for i in range(self.n)) for j in range(self.n)]

    def int_coords(self, x: NFElem) -> list[int]:
        if self.equation_order and x.den == 1:
            return list(x.num)
        c = self.coords(x)
        if any(v.denominator != 1 for v in c):
            raise InvalidParameter("element is not in the order")
        return [v.numerator for v in c]

    def from_coords(self, coords) -> NFElem:
        if self.equation_order:
            return self.field.from_ints(list(coords))
        B = self.basis_matrix
        pw = [sum(Fraction(coords[i]) * B[i][j] for i in range(self.n)) for j in range(self.n)]
        return self.field.from_coeffs(pw)

    def is_integral(self, x: NFElem) -> bool:
        if self.equation_order:
            return x.den == 1
        return all(v.denominator == 1 for v in self.coords(x))

    def element(self, x) -> "OrderElem":
        if isinstance(x, OrderElem):
            return x
        if not isinstance(x, NFElem):
            x = self.field(x)
        return OrderElem(self, x)

    def index_in_maximal(self) -> int | None:
        """[O_K : Z[theta]] when this order is asserted maximal, else None."""
        if not self.is_maximal:
            return None
        det = abs(_det_fraction(self.basis_matrix))
        if det.numerator != 1:
            raise InvalidParameter("order does not contain Z[theta]")
        return det.denominator

    def regular_rep(self, x: NFElem) -> list[list[int]]:
        """Rows: integer coordinates of x * omega_i."""
        if self.equation_order and x.den == 1:
            rows = multiplication_matrix(x)
            return [[int(v) for v in r] for r in rows]
        return [self.int_coords(x * w) for w in self.basis]


class OrderElem:
    __slots__ = ("order", "elem", "_coords")

    def __init__(self, order: Order, elem: NFElem):
        self.order = order
        self.elem = elem
        self._coords = None

    @property
    def coords(self) -> tuple[int, ...]:
        if self._coords is None:
            self._coords = tuple(self.order.int_coords(self.elem))
        return self._coords

    def __mul__(self, o):
        return OrderElem(self.order, self.elem * (o.elem if isinstance(o, OrderElem) else o))

    def __add__(self, o):
        return OrderElem(self.order, self.elem + (o.elem if isinstance(o, OrderElem) else o))

    def __eq__(self, o):
        return isinstance(o, OrderElem) and self.elem == o.elem

    def __hash__(self):
        return hash(self.elem)

    def __str__(self):
        return str(self.elem)

    __repr__ = __str__


# ----------------------------------------------------------------------
# Integer lattice helpers
# ----------------------------------------------------------------------


def hnf_mod(rows, modulus: int, n: int) -> list[list[int]]:
    """Lower-triangular row HNF of span(rows) + modulus * Z^n.

    Row i has its positive pivot in column i; entries left of a pivot are
    reduced into [0, pivot of that column).  Everything is kept modulo
    ``modulus``, which is legitimate because modulus * e_k lies in the
    lattice for every k.
    """
    D = modulus
    if D <= 0:
        raise InvalidParameter("modulus must be positive")
    work = [[x % D for x in r] for r in rows]
    work = [r for r in work if any(r)]
    H: list[list[int] | None] = [None] * n
    for j in range(n - 1, -1, -1):
        piv = None
        rest = []
        for w in work:
            if w[j] == 0:
                rest.append(w)
                continue
            if piv is None:
                piv = w
                continue
            g, u, v = xgcd(piv[j], w[j])
            pa, wa = piv[j] // g, w[j] // g
            new_p = [(u * x + v * y) % D for x, y in zip(piv, w)]
            new_w = [(wa * x - pa * y) % D for x, y in zip(piv, w)]
            new_p[j] = g
            new_w[j] = 0
            piv = new_p
            if any(new_w):
                rest.append(new_w)
        # fold in D * e_j
        if piv is None:
            row = [0] * n
            row[j] = D
            H[j] = row
        else:
            g, u, _ = xgcd(piv[j], D)
            extra = [(D // g * x) % D for x in piv]
            extra[j] = 0
            row = [(u * x) % D for x in piv[:j]] + [g] + [0] * (n - j - 1)
            H[j] = row
            if any(extra):
                rest.append(extra)
        work = [r[:j] + [0] * (n - j) for r in rest]
        work = [r for r in work if any(r)]
    _reduce_offdiag(H)
    return H  # type: ignore[return-value]


def _reduce_offdiag(H):
    n = len(H)
    for i in range(n):
        for k in range(i - 1, -1, -1):
            q = H[i][k] // H[k][k]
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[k])]


def hnf_oracle(rows, modulus: int, n: int) -> list[list[int]]:
    """Independent HNF by plain Euclidean column reduction (test oracle)."""
    D = modulus
    work = [list(r) for r in rows]
    H = [None] * n
    for j in range(n - 1, -1, -1):
        e = [0] * n
        e[j] = D
        work.append(e)
        work = [[x % D if k < j else x for k, x in enumerate(r)] for r in work]
        while True:
            nz = [r for r in work if r[j] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[j]))
            p = nz[0]
            for r in nz[1:]:
                q = r[j] // p[j]
                for k in range(j + 1):
                    r[k] -= q * p[k]
        piv = next(r for r in work if r[j] != 0)
        if piv[j] < 0:
            piv = [-x for x in piv]
        work = [r for r in work if r[j] == 0 and any(r)]
        H[j] = [x % D if k < j else x for k, x in enumerate(piv)]
    _reduce_offdiag(H)
    return H


def _det_triangular(H) -> int:
    return prod(H[i][i] for i in range(len(H)))


# ----------------------------------------------------------------------
# Ideals
# ----------------------------------------------------------------------


def _prime_set(a: int) -> frozenset[int]:
    try:
        return frozenset(factor_small(a))
    except ValueError as exc:
        raise InvalidParameter(f"cannot factor generator {a}: {exc}") from None


class TwoGenIdeal:
    """Integral ideal <a, alpha>; ``normal`` records S-normality for S.

    Passing normal=None runs the normality test on construction.
    """

    def __init__(
        self,
        order: Order,
        a: int,
        alpha,
        S=None,
        normal: bool | None = None,
        norm: int | None = None,
        hnf=None,
    ):
        a = int(a)
        if a <= 0:
            raise InvalidParameter("a must be a positive integer")
        self.order = order
        self.a = a
        self.alpha = order.element(alpha)
        self.S = frozenset(S) if S is not None else _prime_set(a)
        rest = a
        for p in self.S:
            while rest % p == 0:
                rest //= p
        if rest != 1:
            self.S = self.S | _prime_set(rest)
        if normal is None:
            normal = not self.alpha.elem.is_zero() and is_normal(a, self.alpha, self.S, order)
        self.normal = normal
        self.cached_norm = norm
        self.cached_hnf = hnf

    def __repr__(self):
        return f"<{self.a}, {self.alpha}>"

    def __str__(self):
        return f"⟨{self.a}, {self.alpha}⟩"

    def hnf(self) -> list[list[int]]:
        if self.cached_hnf is None:
            self.cached_hnf = hnf_basis(self)
        return self.cached_hnf

    def norm(self) -> int:
        return ideal_norm(self)

    def __eq__(self, o):
        return isinstance(o, TwoGenIdeal) and self.order == o.order and self.hnf() == o.hnf()

    def __hash__(self):
        return hash(tuple(map(tuple, self.hnf())))

    def __mul__(self, o):
        return ideal_mul(self, o)

    def __pow__(self, k):
        return ideal_pow(self, k)


@dataclass
class FracIdeal:
    """numerator / denominator, with the denominator made minimal."""

    numerator: TwoGenIdeal
    denominator: int

    def __eq__(self, o):
        return (
            isinstance(o, FracIdeal)
            and self.denominator == o.denominator
            and self.numerator.hnf() == o.numerator.hnf()
        )

    def __str__(self):
        return f"({self.numerator}) / {self.denominator}"


class PrimeIdeal(TwoGenIdeal):
    def __init__(self, order, p, alpha, residue_degree, ramification):
        super().__init__(order, p, alpha, S={p}, normal=True, norm=p**residue_degree)
        self.p = p
        self.residue_degree = residue_degree
        self.ramification = ramification
        self._val_elem = None

    @property
    def val_elem(self) -> NFElem:
        """gamma with v_P(gamma) = -1 and no poles at other primes."""
        if self._val_elem is None:
            self._val_elem = _inverse_generator(self)
        return self._val_elem

    def __repr__(self):
        return f"<{self.p}, {self.alpha}> (f={self.residue_degree}, e={self.ramification})"


# ----------------------------------------------------------------------
# Basic invariants
# ----------------------------------------------------------------------


def order_denominator(alpha, order: Order | None = None) -> int:
    """Least d > 0 with d / alpha in the order, i.e. alpha*O meets Z in dZ."""
    elem = alpha.elem if isinstance(alpha, OrderElem) else alpha
    if order is None:
        order = alpha.order if isinstance(alpha, OrderElem) else Order(elem.parent)
    if elem.is_zero():
        raise DivisionByZero("zero element")
    inv = elem.inverse()
    d = 1
    for c in order.coords(inv):
        d = lcm(d, c.denominator)
    return d


def is_normal(a: int, alpha, S=None, order: Order | None = None) -> bool:
    """Normality of <a, alpha> for the prime set S (default: primes of a).

    For S = primes of a this is gcd(a, d/gcd(a, d)) = 1 with d the order
    denominator of alpha; primes of S not dividing a must not divide d.
    """
    d = order_denominator(alpha, order)
    s = prod(S) if S else 1
    return gcd(a * s, d // gcd(a, d)) == 1


def hnf_basis(A: TwoGenIdeal) -> list[list[int]]:
    O = A.order
    rows = O.regular_rep(A.alpha.elem)
    return hnf_mod(rows, A.a, O.n)


def ideal_from_hnf(order: Order, H) -> TwoGenIdeal:
    """Non-normal two-generator stand-in: a = H[0][0], alpha = last HNF row.

    Only used to carry a lattice around; HNF comparisons stay exact
    because cached_hnf is set.
    """
    a = H[0][0]
    alpha = order.from_coords(H[-1])
    return TwoGenIdeal(order, a, alpha, normal=False, hnf=[list(r) for r in H])


def basis_product_hnf(order: Order, HA, HB) -> list[list[int]]:
    """Oracle: HNF of the lattice spanned by all products of basis vectors."""
    elems_a = [order.from_coords(r) for r in HA]
    elems_b = [order.from_coords(r) for r in HB]
    rows = [order.int_coords(x * y) for x in elems_a for y in elems_b]
    D = HA[0][0] * HB[0][0]
    return hnf_oracle(rows, D, order.n)


def _reduce_alpha(order: Order, alpha: NFElem, m: int) -> NFElem:
    if order.equation_order and alpha.den == 1:
        return order.field.from_ints([x % m for x in alpha.num])
    return order.from_coords([x % m for x in order.int_coords(alpha)])


# ----------------------------------------------------------------------
# Normal presentations
# ----------------------------------------------------------------------


@dataclass
class NormalSearch:
    start_bound: int = 2
    double_every: int = 10
    max_attempts: int = 1 << 16


def make_normal(
    order: Order,
    basis=None,
    gens=None,
    rng: SplitMix64 | None = None,
    search: NormalSearch = NormalSearch(),
) -> TwoGenIdeal:
    """Normal two-element presentation of the ideal given by a Z-basis
    (rows of integer coordinates) or by arbitrary generators."""
    n = order.n
    if basis is not None:
        rows = [list(map(int, r)) for r in basis]
        # the lattice index is a multiple of min(A cap Z)
        D = abs(_det_fraction([[Fraction(x) for x in r] for r in rows]).numerator)
        if D == 0:
            raise InvalidParameter("basis is not of full rank")
        H = hnf_mod(rows, D, n)
    elif gens is not None:
        gens = [order.field(g) if not isinstance(g, NFElem) else g for g in gens]
        ints = [g for g in gens if g.is_rational() and g.den == 1]
        if not ints:
            N = abs(gens[0].norm())
            if N.denominator != 1 or N == 0:
                raise InvalidParameter("generators must be nonzero integral elements")
            D = N.numerator
        else:
            D = 0
            for g in ints:
                D = gcd(D, abs(g.num[0]))
        rows = [r for g in gens for r in order.regular_rep(g)]
        H = hnf_mod(rows, D, n)
    else:
        raise InvalidParameter("need a basis or generators")
    a = H[0][0]
    S = _prime_set(a)
    if a == 1:
        return TwoGenIdeal(order, 1, order.field.one(), S=S, normal=True, hnf=H)
    rng = rng or SplitMix64(0)
    elems = [order.from_coords(r) for r in H]
    B = search.start_bound
    for attempt in range(search.max_attempts):
        if attempt and attempt % search.double_every == 0:
            B *= 2
        cs = [rng.randint(-B, B) for _ in range(n)]
        alpha = order.field.zero()
        for c, e in zip(cs, elems):
            if c:
                alpha = alpha + e * c
        if alpha.is_zero():
            continue
        if not is_normal(a, alpha, order=order):
            continue
        cand = TwoGenIdeal(order, a, alpha, S=S, normal=True)
        if cand.hnf() == H:
            cand.cached_norm = _det_triangular(H)
            return cand
    raise RandomSearchExhausted("no normal presentation found")


def extend_S(A: TwoGenIdeal, T) -> TwoGenIdeal:
    """Same ideal, presented normally for S | T.

    With s = prod S and t = prod(T - S), gcd(a*s, t) = 1, so
    1 = u*a*s + v*t and beta = v*t*alpha + u*a*s works.
    """
    T = frozenset(T)
    new = T - A.S
    if not new:
        return A
    s = prod(A.S)
    t = prod(new)
    g, u, v = xgcd(A.a * s, t)
    if g != 1:
        raise InvalidParameter("prime sets overlap the generator")
    K = A.order.field
    beta = A.alpha.elem * (v * t) + K._from_int(u * A.a * s)
    S2 = A.S | new
    beta = _reduce_alpha(A.order, beta, A.a * s * t)
    return TwoGenIdeal(
        A.order, A.a, beta, S=S2, normal=A.normal, norm=A.cached_norm, hnf=A.cached_hnf
    )


def ideal_mul(A: TwoGenIdeal, B: TwoGenIdeal) -> TwoGenIdeal:
    if A.order != B.order:
        raise InvalidParameter("ideals of different orders")
    S = A.S | B.S
    A2 = extend_S(A, S)
    B2 = extend_S(B, S)
    ab = A.a * B.a
    alpha = A2.alpha.elem * B2.alpha.elem
    alpha = _reduce_alpha(A.order, alpha, ab * prod(S))
    norm = None
    if A.cached_norm is not None and B.cached_norm is not None:
        norm = A.cached_norm * B.cached_norm
    return TwoGenIdeal(A.order, ab, alpha, S=S, normal=A.normal and B.normal, norm=norm)


def ideal_norm(A: TwoGenIdeal, use_cache: bool = True) -> int:
    """N(A) = gcd(a^n, N(alpha)) for a normal presentation."""
    if use_cache and A.cached_norm is not None:
        return A.cached_norm
    if not A.normal:
        N = _det_triangular(A.hnf())
    else:
        N = gcd(A.a**A.order.n, _int_norm(A.alpha.elem, A.order))
    if use_cache:
        A.cached_norm = N
    return N


def _int_norm(x: NFElem, order: Order) -> int:
    N = x.norm()
    if N.denominator != 1:
        raise InvalidParameter("element is not integral")
    return abs(N.numerator)


def unit_ideal(order: Order) -> TwoGenIdeal:
    return TwoGenIdeal(order, 1, order.field.one(), S=frozenset(), normal=True, norm=1)


def ideal_pow(A: TwoGenIdeal, k: int) -> TwoGenIdeal:
    if k < 0:
        raise InvalidParameter("negative exponent; use ideal_inverse")
    if k == 0:
        return unit_ideal(A.order)
    if k == 1:
        return A
    ak = A.a**k
    s = prod(A.S)
    m = ak * s
    # square-and-multiply with reduction modulo a^k * s throughout
    result = None
    base = A.alpha.elem
    e = k
    while e:
        if e & 1:
            result = base if result is None else _reduce_alpha(A.order, result * base, m)
        e >>= 1
        if e:
            base = _reduce_alpha(A.order, base * base, m)
    norm = A.cached_norm**k if A.cached_norm is not None else None
    return TwoGenIdeal(A.order, ak, result, S=A.S, normal=A.normal, norm=norm)


def _inverse_generator(A: TwoGenIdeal) -> NFElem:
    """g2 / alpha, where g = min(alpha O cap Z) and g2 is its part prime to S."""
    alpha = A.alpha.elem
    if alpha.is_zero():
        raise DivisionByZero("zero ideal")
    g = order_denominator(alpha, A.order)
    g2 = g
    for p in A.S:
        while g2 % p == 0:
            g2 //= p
    return alpha.inverse() * g2


def ideal_inverse(A: TwoGenIdeal) -> FracIdeal:
    """A^-1 = <1, g2/alpha> as numerator / denominator with minimal denominator."""
    O = A.order
    n = O.n
    if A.a == 1:
        return FracIdeal(unit_ideal(O), 1)
    delta = _inverse_generator(A)
    k = 1
    for c in O.coords(delta):
        k = lcm(k, c.denominator)
    kd = delta * k
    H = hnf_mod(O.regular_rep(kd), k, n)
    c = k
    for row in H:
        for x in row:
            c = gcd(c, x)
    if c > 1:
        H = [[x // c for x in row] for row in H]
        kd = kd * O.field.from_coeffs([Fraction(1, c)])
    num = TwoGenIdeal(O, H[0][0], kd, hnf=H)
    return FracIdeal(num, k // c)


# ----------------------------------------------------------------------
# Prime ideals and valuations
# ----------------------------------------------------------------------


def _index_guard(O: Order, p: int):
    idx = O.index_in_maximal()
    if idx is not None:
        if idx % p == 0:
            raise IndexDivisor(f"{p} divides the index of the equation order")
        return
    from .poly import intpoly

    f = list(O.field.f)
    df = [i * c for i, c in enumerate(f)][1:]
    if intpoly.resultant(f, df) % p == 0:
        raise IndexDivisor(f"{p} divides the discriminant of the defining polynomial")


def prime_decomposition(O: Order, p: int, max_residue_degree: int | None = None):
    """Primes above p, as {p}-normal <p, g(theta)> (Dedekind-Kummer).

    With ``max_residue_degree`` only primes of residue degree up to that
    bound are returned.
    """
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    _index_guard(O, p)
    K = O.field
    out = []
    for g, e in gfpoly.factor(list(K.f), p, max_degree=max_residue_degree):
        deg = len(g) - 1
        alpha = K.from_ints(list(g))
        if alpha.is_zero() or not is_normal(p, alpha, order=O):
            alpha = alpha + K._from_int(p)
        out.append(PrimeIdeal(O, p, alpha, deg, e))
    return out


def valuation(beta, P: PrimeIdeal) -> int:
    """v_P of an element (count of gamma multiples staying integral) or of
    an integral ideal (via its normal generator)."""
    O = P.order
    if isinstance(beta, TwoGenIdeal):
        if beta.a % P.p:
            return 0
        A = extend_S(beta, {P.p}) if P.p not in beta.S else beta
        if not A.normal:
            raise InvalidParameter("ideal valuation needs a normal presentation")
        return valuation(A.alpha, P)
    x = beta.elem if isinstance(beta, OrderElem) else O.field(beta)
    if x.is_zero():
        raise DivisionByZero("valuation of zero")
    gamma = P.val_elem
    k = 0
    while True:
        x = x * gamma
        if not O.is_integral(x):
            return k
        k += 1


def small_prime_ideals(O: Order, bound: int) -> list[PrimeIdeal]:
    """All prime ideals of norm <= bound, ordered by (norm, p)."""
    from .intarith import primes_upto

    out = []
    for p in primes_upto(bound):
        maxdeg = 1
        while p ** (maxdeg + 1) <= bound:
            maxdeg += 1
        out.extend(P for P in prime_decomposition(O, p, maxdeg) if P.cached_norm <= bound)
    out.sort(key=lambda P: (P.cached_norm, P.p))
    return out
