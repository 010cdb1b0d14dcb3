"""Sparse distributed multivariate polynomials.

A polynomial is two parallel lists, packed exponent keys (strictly
decreasing) and nonzero coefficients.  With k variables and field width w
the key of x1^e1 ... xk^ek is

    tdeg << k*w | e1 << (k-1)*w | ... | ek

so integer comparison of keys is graded lexicographic order and monomial
multiplication is key addition.  Every field keeps its top bit clear
(tdeg < 2^(w-1)), which makes sums overflow-free and gives a branch-free
divisibility test.  Widths double transparently when degrees grow.
"""
from __future__ import annotations

import heapq
from math import factorial

from ..errors import DivisionByZero, InexactDivision, InvalidParameter, NotInvertible
from ..rings import (
    IntegerRing,
    Ring,
    RingElement,
    RingKind,
)
from ..textfmt import join_terms

_WIDTHS = (8, 16, 32, 64)


def _width_for(tdeg: int) -> int:
    for w in _WIDTHS:
        if tdeg < (1 << (w - 1)):
            return w
    w = 128
    while tdeg >= (1 << (w - 1)):
        w *= 2
    return w


class MPolyRing(Ring):
    kind = RingKind.MPOLY_RING

    def __init__(self, base: Ring, vars: tuple[str, ...]):
        vars = tuple(vars)
        if not vars or len(set(vars)) != len(vars):
            raise InvalidParameter("need distinct variable names")
        self.base = base
        self.vars = vars
        self.nvars = len(vars)
        self.is_domain = base.is_domain
        self._freeze()

    def _key(self):
        return ("MPoly", self.base._key(), self.vars)

    def __str__(self):
        return f"{self.base}[{', '.join(self.vars)}]"

    __repr__ = __str__

    @property
    def characteristic(self):
        return self.base.characteristic

    # -- packing --------------------------------------------------------
    def pack(self, exps, w: int) -> int:
        k = self.nvars
        key = sum(exps) << (k * w)
        for i, e in enumerate(exps):
            key |= e << ((k - 1 - i) * w)
        return key

    def unpack(self, key: int, w: int) -> tuple[int, ...]:
        k = self.nvars
        mask = (1 << w) - 1
        return tuple((key >> ((k - 1 - i) * w)) & mask for i in range(k))

    def tdeg_of(self, key: int, w: int) -> int:
        return key >> (self.nvars * w)

    def guard_mask(self, w: int) -> int:
        top = 1 << (w - 1)
        g = 0
        for i in range(self.nvars + 1):
            g |= top << (i * w)
        return g

    # -- construction ---------------------------------------------------
    def _from_int(self, n):
        return self._from_base(self.base._from_int(n))

    def _from_base(self, b):
        if b.is_zero():
            return SparsePoly(self, [], [], 8)
        return SparsePoly(self, [0], [b], 8)

    def _from_other(self, value):
        if isinstance(value, dict):
            return self.from_dict(value)
        return super()._from_other(value)

    def from_dict(self, d: dict) -> "SparsePoly":
        """Build from {exponent tuple: coefficient}."""
        R = self.base
        items = []
        maxdeg = 0
        for e, c in d.items():
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars or min(e) < 0:
                raise InvalidParameter(f"bad exponent vector {e}")
            c = R(c)
            if not c.is_zero():
                items.append((e, c))
                maxdeg = max(maxdeg, sum(e))
        w = _width_for(maxdeg)
        items = sorted(((self.pack(e, w), c) for e, c in items), key=lambda t: -t[0])
        return SparsePoly(self, [k for k, _ in items], [c for _, c in items], w)

    def gens(self) -> list["SparsePoly"]:
        out = []
        one = self.base.one()
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(SparsePoly(self, [self.pack(e, 8)], [one], 8))
        return out

    def gen(self, i: int = 0) -> "SparsePoly":
        return self.gens()[i]

    def _parse_names(self):
        names = super()._parse_names()
        names.update(zip(self.vars, self.gens()))
        return names

    def gcd(self, a, b):
        return subresultant_gcd(a, b)

    def canonical_unit(self, a):
        if a.is_zero():
            return self.one()
        return self._from_base(self.base.canonical_unit(a.coeffs[0]))


class SparsePoly(RingElement):
    __slots__ = ("keys", "coeffs", "bits")

    def __init__(self, parent: MPolyRing, keys: list[int], coeffs: list, bits: int):
        self.parent = parent
        self.keys = keys
        self.coeffs = coeffs
        self.bits = bits

    # -- queries --------------------------------------------------------
    def __len__(self):
        return len(self.keys)

    def nterms(self) -> int:
        return len(self.keys)

    def _is_zero(self):
        return not self.keys

    def is_one(self):
        return len(self.keys) == 1 and self.keys[0] == 0 and self.coeffs[0].is_one()

    def is_constant(self) -> bool:
        return not self.keys or (len(self.keys) == 1 and self.keys[0] == 0)

    def exponents(self) -> list[tuple[int, ...]]:
        P, w = self.parent, self.bits
        return [P.unpack(k, w) for k in self.keys]

    def terms(self) -> list[tuple[tuple[int, ...], RingElement]]:
        return list(zip(self.exponents(), self.coeffs))

    def to_dict(self) -> dict:
        return dict(self.terms())

    def total_degree(self) -> int:
        return self.parent.tdeg_of(self.keys[0], self.bits) if self.keys else -1

    def degree(self, var: int) -> int:
        """Degree in variable index ``var`` (-1 for zero)."""
        if not self.keys:
            return -1
        return max(e[var] for e in self.exponents())

    def degrees(self) -> list[int]:
        if not self.keys:
            return [-1] * self.parent.nvars
        ex = self.exponents()
        return [max(e[i] for e in ex) for i in range(self.parent.nvars)]

    def lc(self):
        return self.coeffs[0] if self.coeffs else self.parent.base.zero()

    def lm(self) -> tuple[int, ...]:
        return self.parent.unpack(self.keys[0], self.bits)

    def constant_value(self):
        if not self.keys:
            return self.parent.base.zero()
        if self.keys[-1] == 0:
            return self.coeffs[-1]
        return self.parent.base.zero()

    def check_invariants(self):
        """Debug validator: strictly decreasing keys, nonzero coefficients."""
        for a, b in zip(self.keys, self.keys[1:]):
            if not a > b:
                raise AssertionError("terms not strictly sorted")
        for c in self.coeffs:
            if c.is_zero():
                raise AssertionError("zero coefficient stored")
        return True

    def _eq(self, o):
        if len(self.keys) != len(o.keys):
            return False
        if self.bits != o.bits:
            a, b = _aligned(self, o)
            return a.keys == b.keys and all(x._eq(y) for x, y in zip(a.coeffs, b.coeffs))
        return self.keys == o.keys and all(x._eq(y) for x, y in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash(tuple(zip(self.exponents(), (hash(c) for c in self.coeffs))))

    def __str__(self):
        names = self.parent.vars
        items = []
        for e, c in self.terms():
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(names, e) if k
            )
            items.append((str(c), mono))
        return join_terms(items)

    # -- width handling -------------------------------------------------
    def repack(self, w: int) -> "SparsePoly":
        if w == self.bits:
            return self
        P = self.parent
        keys = [P.pack(P.unpack(k, self.bits), w) for k in self.keys]
        return SparsePoly(P, keys, self.coeffs, w)

    # -- ring operations ------------------------------------------------
    def _add(self, o):
        return _merge(self, o, False)

    def _sub(self, o):
        return _merge(self, o, True)

    def _neg(self):
        return SparsePoly(self.parent, self.keys, [c._neg() for c in self.coeffs], self.bits)

    def _mul(self, o):
        return heap_mul(self, o)

    def scale(self, c) -> "SparsePoly":
        if c.is_zero():
            return self.parent.zero()
        ks, cs = [], []
        for k, x in zip(self.keys, self.coeffs):
            y = x._mul(c)
            if not y.is_zero():
                ks.append(k)
                cs.append(y)
        return SparsePoly(self.parent, ks, cs, self.bits)

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return super().__pow__(k)
        return heap_pow(self, k)

    def _inverse(self):
        if self.is_constant() and self.keys:
            return self.parent._from_base(self.coeffs[0].inverse())
        raise NotInvertible(f"{self} is not a unit")

    def _divexact(self, o):
        return heap_exact_div(self, o)

    def divrem(self, g):
        return heap_divrem(self, g)

    def _assign(self, o):
        self.keys, self.coeffs, self.bits = o.keys, o.coeffs, o.bits

    def canonical(self) -> "SparsePoly":
        if not self.keys:
            return self
        u = self.parent.base.canonical_unit(self.coeffs[0])
        if u.is_one():
            return self
        inv = u.inverse()
        return self.scale(inv)


def _aligned(f: SparsePoly, g: SparsePoly, tdeg: int | None = None):
    w = max(f.bits, g.bits)
    if tdeg is not None:
        w = max(w, _width_for(tdeg))
    return f.repack(w), g.repack(w)


def _merge(f, g, negate):
    f, g = _aligned(f, g)
    fk, fc, gk, gc = f.keys, f.coeffs, g.keys, g.coeffs
    ks, cs = [], []
    i = j = 0
    nf, ng = len(fk), len(gk)
    while i < nf and j < ng:
        a, b = fk[i], gk[j]
        if a > b:
            ks.append(a)
            cs.append(fc[i])
            i += 1
        elif a < b:
            ks.append(b)
            cs.append(gc[j]._neg() if negate else gc[j])
            j += 1
        else:
            c = fc[i]._sub(gc[j]) if negate else fc[i]._add(gc[j])
            if not c.is_zero():
                ks.append(a)
                cs.append(c)
            i += 1
            j += 1
    ks.extend(fk[i:])
    cs.extend(fc[i:])
    ks.extend(gk[j:])
    cs.extend(c._neg() for c in gc[j:]) if negate else cs.extend(gc[j:])
    return SparsePoly(f.parent, ks, cs, f.bits)


# ----------------------------------------------------------------------
# Heap multiplication
# ----------------------------------------------------------------------
def heap_mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Johnson/Monagan-Pearce heap product with chained equal monomials."""
    P = f.parent
    if not f.keys or not g.keys:
        return P.zero()
    tdeg = f.total_degree() + g.total_degree()
    f, g = _aligned(f, g, tdeg)
    if len(f.keys) > len(g.keys):
        f, g = g, f
    if isinstance(P.base, IntegerRing) and _fits_machine(P, f.bits, tdeg):
        from . import _zz_kernel

        return _zz_kernel.mul_zz(f, g)
    return _heap_mul_python(f, g)


def _fits_machine(P: MPolyRing, w: int, tdeg: int) -> bool:
    # largest possible key must fit in a signed 64-bit word
    return (tdeg + 1) << (P.nvars * w) < (1 << 63)


def _heap_mul_python(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    P = f.parent
    R = P.base
    fk, fc, gk, gc = f.keys, f.coeffs, g.keys, g.coeffs
    nf, ng = len(fk), len(gk)
    dot = R._dot
    heap: list[int] = [-(fk[0] + gk[0])]
    chains: dict[int, list[tuple[int, int]]] = {fk[0] + gk[0]: [(0, 0)]}
    ks, cs = [], []
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        key = -pop(heap)
        chain = chains.pop(key)
        c = dot([fc[i] for i, _ in chain], [gc[j] for _, j in chain])
        if not c.is_zero():
            ks.append(key)
            cs.append(c)
        for i, j in chain:
            if j == 0 and i + 1 < nf:
                k2 = fk[i + 1] + gk[0]
                lst = chains.get(k2)
                if lst is None:
                    chains[k2] = [(i + 1, 0)]
                    push(heap, -k2)
                else:
                    lst.append((i + 1, 0))
            if j + 1 < ng:
                k2 = fk[i] + gk[j + 1]
                lst = chains.get(k2)
                if lst is None:
                    chains[k2] = [(i, j + 1)]
                    push(heap, -k2)
                else:
                    lst.append((i, j + 1))
    return SparsePoly(P, ks, cs, f.bits)


# ----------------------------------------------------------------------
# Division
# ----------------------------------------------------------------------
def heap_divrem(f: SparsePoly, g: SparsePoly, exact: bool = False):
    """(q, r) with f = q*g + r and no term of r divisible by lm(g).

    The heap merges the terms of f with the streams -q_j * g[1:], one
    stream per quotient term.  lc(g) must be a unit unless ``exact`` is
    set, in which case quotient coefficients use exact division.
    """
    P = f.parent
    R = P.base
    if not g.keys:
        raise DivisionByZero("multivariate division by zero")
    if not f.keys:
        return P.zero(), P.zero()
    f, g = _aligned(f, g)
    w = f.bits
    G = P.guard_mask(w)
    fk, fc, gk, gc = f.keys, f.coeffs, g.keys, g.coeffs
    lm, lc = gk[0], gc[0]
    inv = None
    if lc.is_one():
        inv = lc
    elif not exact:
        inv = lc.inverse()
    else:
        try:
            inv = lc.inverse()
        except NotInvertible:
            inv = None
    qk, qc, rk, rc = [], [], [], []
    # heap entries keyed by -key; chains hold sources: (-1, i) for f, (qi, gi) for q*g
    heap = [-fk[0]]
    chains: dict[int, list[tuple[int, int]]] = {fk[0]: [(-1, 0)]}
    ng = len(gk)

    def insert(key, src):
        lst = chains.get(key)
        if lst is None:
            chains[key] = [src]
            heapq.heappush(heap, -key)
        else:
            lst.append(src)

    while heap:
        key = -heapq.heappop(heap)
        chain = chains.pop(key)
        c = R.zero()
        plus, qs, gs = [], [], []
        for a, b in chain:
            if a < 0:
                plus.append(fc[b])
                if b + 1 < len(fk):
                    insert(fk[b + 1], (-1, b + 1))
            else:
                qs.append(qc[a])
                gs.append(gc[b])
                if b + 1 < ng:
                    insert(qk[a] + gk[b + 1], (a, b + 1))
        for x in plus:
            c = c._add(x)
        if qs:
            c = c._sub(R._dot(qs, gs))
        if c.is_zero():
            continue
        if ((key | G) - lm) & G == G:
            q = c._mul(inv) if inv is not None else c.divexact(lc)
            qk.append(key - lm)
            qc.append(q)
            if ng > 1:
                insert(key - lm + gk[1], (len(qk) - 1, 1))
        else:
            if exact:
                raise InexactDivision("nonzero remainder in exact division")
            rk.append(key)
            rc.append(c)
    return SparsePoly(P, qk, qc, w), SparsePoly(P, rk, rc, w)


def heap_exact_div(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    q, r = heap_divrem(f, g, exact=True)
    if r.keys:
        raise InexactDivision("nonzero remainder in exact division")
    return q


# ----------------------------------------------------------------------
# Powering
# ----------------------------------------------------------------------
MULTINOMIAL_MAX_TERMS = 5
MULTINOMIAL_MIN_EXP = 4


def heap_pow(f: SparsePoly, k: int) -> SparsePoly:
    """f^k; few-term bases use the multinomial formula, others repeated heap products."""
    P = f.parent
    if k < 0:
        raise InvalidParameter("negative exponent")
    if k == 0:
        return P.one()
    if k == 1 or not f.keys:
        return f
    if len(f.keys) == 1:
        w = _width_for(f.total_degree() * k)
        g = f.repack(w)
        return SparsePoly(P, [g.keys[0] * k], [g.coeffs[0] ** k], w)
    if len(f.keys) <= MULTINOMIAL_MAX_TERMS and k >= MULTINOMIAL_MIN_EXP:
        return multinomial_pow(f, k)
    acc = f
    for _ in range(k - 1):
        acc = heap_mul(acc, f)
    return acc


def _compositions(k: int, m: int):
    """All (k_1..k_m) with sum k, in lex-descending order."""
    if m == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(k - first, m - 1):
            yield (first,) + rest


def multinomial_pow(f: SparsePoly, k: int) -> SparsePoly:
    """f^k = sum over k_1+..+k_m = k of k!/(k_1!..k_m!) prod c_t^k_t X^(sum k_t e_t)."""
    P = f.parent
    R = P.base
    if k == 0:
        return P.one()
    w = _width_for(max(f.total_degree(), 0) * k)
    f = f.repack(w)
    m = len(f.keys)
    if m == 0:
        return P.zero()
    powers = []
    for c in f.coeffs:
        row = [R.one()]
        for _ in range(k):
            row.append(row[-1]._mul(c))
        powers.append(row)
    fact = [factorial(i) for i in range(k + 1)]
    acc: dict[int, RingElement] = {}
    fk = f.keys
    for comp in _compositions(k, m):
        mult = fact[k]
        key = 0
        c = None
        for t, kt in enumerate(comp):
            mult //= fact[kt]
            if kt:
                key += fk[t] * kt
                c = powers[t][kt] if c is None else c._mul(powers[t][kt])
        term = c._mul(R._from_int(mult))
        prev = acc.get(key)
        acc[key] = term if prev is None else prev._add(term)
    keys = sorted((kk for kk, v in acc.items() if not v.is_zero()), reverse=True)
    return SparsePoly(P, keys, [acc[kk] for kk in keys], w)


# ----------------------------------------------------------------------
# Naive oracles
# ----------------------------------------------------------------------
def naive_mul(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """Quadratic product through exponent-tuple dictionaries."""
    acc: dict = {}
    for e1, c1 in f.terms():
        for e2, c2 in g.terms():
            e = tuple(a + b for a, b in zip(e1, e2))
            t = c1 * c2
            acc[e] = acc[e] + t if e in acc else t
    return f.parent.from_dict(acc)


def naive_pow(f: SparsePoly, k: int) -> SparsePoly:
    acc = f.parent.one()
    for _ in range(k):
        acc = naive_mul(acc, f)
    return acc


def _grlex(e):
    return (sum(e), e)


def naive_divrem(f: SparsePoly, g: SparsePoly):
    """Textbook multivariate division by a single divisor."""
    P = f.parent
    if g.is_zero():
        raise DivisionByZero("division by zero")
    gt = g.terms()
    lm, lc = gt[0]
    inv = lc.inverse()
    p = dict(f.terms())
    q: dict = {}
    r: dict = {}
    while p:
        e = max(p, key=_grlex)
        c = p.pop(e)
        if all(a >= b for a, b in zip(e, lm)):
            qe = tuple(a - b for a, b in zip(e, lm))
            qc = c * inv
            q[qe] = qc
            for ge, gc in gt[1:]:
                t = tuple(a + b for a, b in zip(qe, ge))
                v = p.get(t, P.base.zero()) - qc * gc
                if v.is_zero():
                    p.pop(t, None)
                else:
                    p[t] = v
        else:
            r[e] = c
    return P.from_dict(q), P.from_dict(r)


# ----------------------------------------------------------------------
# Recursive view, pseudo-remainder, gcd
# ----------------------------------------------------------------------
def to_univariate(f: SparsePoly, var: int) -> dict[int, SparsePoly]:
    """Split f = sum_i c_i * x_var^i with c_i free of x_var."""
    P = f.parent
    buckets: dict[int, tuple[list, list]] = {}
    for e, c in f.terms():
        d = e[var]
        e2 = e[:var] + (0,) + e[var + 1 :]
        b = buckets.setdefault(d, ([], []))
        b[0].append(e2)
        b[1].append(c)
    w = f.bits
    out = {}
    for d, (es, cs) in buckets.items():
        # terms stay in descending order after zeroing one coordinate? not in general
        items = sorted(zip((P.pack(e, w) for e in es), cs), key=lambda t: -t[0])
        out[d] = SparsePoly(P, [k for k, _ in items], [c for _, c in items], w)
    return out


def from_univariate(P: MPolyRing, coeffs: dict[int, SparsePoly], var: int) -> SparsePoly:
    acc = P.zero()
    x = P.gen(var)
    for d, c in coeffs.items():
        if not c.is_zero():
            acc = acc + heap_mul(c, heap_pow(x, d)) if d else acc + c
    return acc


def _univ_degree(u: dict) -> int:
    return max((d for d, c in u.items() if not c.is_zero()), default=-1)


def pseudorem_univ(f: SparsePoly, g: SparsePoly, var: int) -> SparsePoly:
    """lc(g)^(deg f - deg g + 1) * f mod g, viewing both as univariate in ``var``.

    Coefficients are polynomials in the other variables, multiplied with
    the heap kernel; no coefficient division takes place.
    """
    P = f.parent
    gu = to_univariate(g, var)
    dg = _univ_degree(gu)
    if dg < 0:
        raise DivisionByZero("pseudo-remainder by zero")
    ru = to_univariate(f, var)
    df = _univ_degree(ru)
    if df < dg:
        return f
    lcg = gu[dg]
    e = df - dg + 1
    while True:
        dr = _univ_degree(ru)
        if dr < dg:
            break
        lcr = ru[dr]
        s = dr - dg
        new: dict[int, SparsePoly] = {}
        for d, c in ru.items():
            if d != dr:
                new[d] = heap_mul(lcg, c)
        for d, c in gu.items():
            if d == dg:
                continue
            t = heap_mul(lcr, c)
            new[d + s] = new[d + s] - t if d + s in new else -t
        ru = {d: c for d, c in new.items() if not c.is_zero()}
        e -= 1
    if e:
        m = heap_pow(lcg, e)
        ru = {d: heap_mul(m, c) for d, c in ru.items()}
    return from_univariate(P, ru, var)


def variable_order_heuristic(f: SparsePoly, g: SparsePoly) -> list[int]:
    """Variables in which both inputs are monic first (by max degree), then
    the rest by max(deg_f, deg_g); ties by index."""
    n = f.parent.nvars
    df, dg = f.degrees(), g.degrees()
    monic_both = [i for i in range(n) if _monic_in(f, i) and _monic_in(g, i)]
    rest = [i for i in range(n) if i not in monic_both]
    monic_both.sort(key=lambda i: (max(df[i], dg[i]), i))
    rest.sort(key=lambda i: (max(df[i], dg[i]), i))
    return monic_both + rest


def _monic_in(f: SparsePoly, var: int) -> bool:
    if not f.keys:
        return False
    u = to_univariate(f, var)
    d = _univ_degree(u)
    return d > 0 and u[d].is_one()


def content(f: SparsePoly, var: int) -> SparsePoly:
    """gcd of the coefficients of f viewed as univariate in ``var``."""
    P = f.parent
    if not f.keys:
        return P.zero()
    u = to_univariate(f, var)
    coeffs = [u[d] for d in sorted(u)]
    return _gcd_list(coeffs, P)


def _gcd_list(polys, P, seed=None):
    g = seed if seed is not None else P.zero()
    # try small ones first: cheap gcds shrink quickly
    for c in sorted(polys, key=len):
        g = subresultant_gcd(g, c)
        if g.is_one():
            break
    return g


def primitive_part(f: SparsePoly, var: int) -> SparsePoly:
    if not f.keys:
        return f
    c = content(f, var)
    return heap_exact_div(f, c).canonical()


def _base_content(f: SparsePoly):
    R = f.parent.base
    g = R.zero()
    for c in f.coeffs:
        g = R.gcd(g, c)
        if g.is_one():
            break
    return g


def subresultant_gcd(f: SparsePoly, g: SparsePoly) -> SparsePoly:
    """GCD over an integral domain via the subresultant PRS.

    Content is split off recursively in the main variable chosen by the
    heuristic.  The last nonzero subresultant S is made primitive cheaply:
    lc(gcd) divides l = gcd(lc f, lc g), so l*S/lc(S) is an exact quotient
    whose content divides l.
    """
    P = f.parent
    R = P.base
    if not f.keys:
        return g.canonical()
    if not g.keys:
        return f.canonical()
    if f.is_constant() or g.is_constant():
        c = R.gcd(_base_content(f), _base_content(g))
        return P._from_base(c).canonical()
    df, dg = f.degrees(), g.degrees()
    order = variable_order_heuristic(f, g)
    var = next(i for i in order if df[i] > 0 or dg[i] > 0)
    cf, cg = content(f, var), content(g, var)
    pf, pg = heap_exact_div(f, cf), heap_exact_div(g, cg)
    c = subresultant_gcd(cf, cg)
    a, b = pf, pg
    da, db = a.degree(var), b.degree(var)
    if da <= 0 or db <= 0:
        return c.canonical()
    if da < db:
        a, b = b, a
    la = to_univariate(a, var)
    lb = to_univariate(b, var)
    ell = subresultant_gcd(la[_univ_degree(la)], lb[_univ_degree(lb)])
    last = b
    gg = hh = P.one()
    while True:
        delta = a.degree(var) - b.degree(var)
        r = pseudorem_univ(a, b, var)
        if r.is_zero():
            last = b
            break
        if r.degree(var) == 0:
            return c.canonical()
        a = b
        d = heap_mul(gg, heap_pow(hh, delta))
        b = heap_exact_div(r, d)
        ua = to_univariate(a, var)
        gg = ua[_univ_degree(ua)]
        if delta == 1:
            hh = gg
        elif delta > 1:
            hh = heap_exact_div(heap_pow(gg, delta), heap_pow(hh, delta - 1))
    ul = to_univariate(last, var)
    lc_last = ul[_univ_degree(ul)]
    S = heap_exact_div(heap_mul(ell, last), lc_last)
    cont = _gcd_list([v for v in to_univariate(S, var).values()], P, seed=ell)
    h = heap_exact_div(S, cont)
    return heap_mul(c, h).canonical()


# ----------------------------------------------------------------------
# Random inputs
# ----------------------------------------------------------------------
def random_coeff(R, rng, bound: int = 50):
    from ..rings import FiniteField, IntegerModRing, RationalField

    if isinstance(R, FiniteField):
        return R.random_element(rng)
    if isinstance(R, IntegerModRing):
        return R(rng.randbelow(R.n))
    if isinstance(R, RationalField):
        return R(rng.randint(-bound, bound)) / R(rng.randint(1, 9))
    return R(rng.randint(-bound, bound))


def random_poly(P: MPolyRing, rng, terms: int, max_deg: int, bound: int = 50) -> SparsePoly:
    """Up to ``terms`` random terms with exponents in [0, max_deg]."""
    d = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, max_deg) for _ in range(P.nvars))
        d[e] = random_coeff(P.base, rng, bound)
    return P.from_dict(d)
