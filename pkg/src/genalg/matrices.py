"""Dense matrices over any ring handle, with determinant, characteristic
polynomial and minimal polynomial algorithms.

Division-free routines (Berkowitz, clow sequences) work over any
commutative ring; fraction-free elimination and Danilevsky need exact
division; Hessenberg reduction and spinning need a field.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (
    ImpossibleInverse,
    InexactDivision,
    InsufficientPoints,
    InvalidParameter,
    NonSquare,
    NotInvertible,
    ZeroPivotUnresolvable,
)
from .intarith import crt_pair, prime_stream, symmetric_mod
from .rings import (
    QQ,
    ZZ,
    FractionField,
    IntegerModRing,
    IntegerRing,
    Ring,
    RingElement,
    RingKind,
)


class MatrixSpace(Ring):
    kind = RingKind.MATRIX_SPACE
    is_domain = False

    def __init__(self, base: Ring, rows: int, cols: int):
        if rows < 0 or cols < 0:
            raise InvalidParameter("negative matrix dimension")
        self.base = base
        self.rows = int(rows)
        self.cols = int(cols)
        self._freeze()

    def _key(self):
        return ("Mat", self.base._key(), self.rows, self.cols)

    def __str__(self):
        return f"Mat({self.base}, {self.rows}, {self.cols})"

    __repr__ = __str__

    def _scalar(self, c):
        if self.rows != self.cols and not c.is_zero():
            raise InvalidParameter("scalar matrices must be square")
        z = self.base.zero()
        return DenseMatrix(
            self,
            [[c if i == j else z for j in range(self.cols)] for i in range(self.rows)],
        )

    def _from_int(self, n):
        return self._scalar(self.base._from_int(n))

    def _from_base(self, b):
        return self._scalar(b)

    def _from_other(self, value):
        if isinstance(value, (list, tuple)):
            return self.from_rows(value)
        return super()._from_other(value)

    def from_rows(self, rows) -> "DenseMatrix":
        if len(rows) != self.rows or any(len(r) != self.cols for r in rows):
            raise InvalidParameter("row data does not match the matrix space")
        R = self.base
        return DenseMatrix(self, [[R(x) for x in r] for r in rows])

    def identity(self):
        return self._from_int(1)

    @property
    def characteristic(self):
        return self.base.characteristic


class DenseMatrix(RingElement):
    __slots__ = ("rows",)

    def __init__(self, parent: MatrixSpace, rows: list[list]):
        self.parent = parent
        self.rows = rows

    @property
    def nrows(self) -> int:
        return self.parent.rows

    @property
    def ncols(self) -> int:
        return self.parent.cols

    @property
    def base(self) -> Ring:
        return self.parent.base

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_square(self) -> bool:
        return self.parent.rows == self.parent.cols

    def _add(self, o):
        return DenseMatrix(
            self.parent,
            [[a._add(b) for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)],
        )

    def _sub(self, o):
        return DenseMatrix(
            self.parent,
            [[a._sub(b) for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)],
        )

    def _neg(self):
        return DenseMatrix(self.parent, [[a._neg() for a in r] for r in self.rows])

    def _mul(self, o):
        return self.matmul(o)

    def matmul(self, o: "DenseMatrix") -> "DenseMatrix":
        if self.ncols != o.nrows:
            raise InvalidParameter("dimension mismatch in matrix product")
        R = self.base
        cols = [list(c) for c in zip(*o.rows)] if o.rows else []
        space = MatrixSpace(R, self.nrows, o.ncols)
        dot = R._dot
        return DenseMatrix(space, [[dot(r, c) for c in cols] for r in self.rows])

    def mulvec(self, v: list) -> list:
        dot = self.base._dot
        return [dot(r, v) for r in self.rows]

    def transpose(self) -> "DenseMatrix":
        space = MatrixSpace(self.base, self.ncols, self.nrows)
        return DenseMatrix(space, [list(c) for c in zip(*self.rows)])

    def map(self, f, base: Ring) -> "DenseMatrix":
        space = MatrixSpace(base, self.nrows, self.ncols)
        return DenseMatrix(space, [[f(x) for x in r] for r in self.rows])

    def _is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def _eq(self, o):
        return all(a._eq(b) for r, s in zip(self.rows, o.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(tuple(hash(x) for r in self.rows for x in r))

    def _inverse(self):
        raise NotInvertible("matrix inverse is not provided")

    def _assign(self, o):
        self.rows = o.rows

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + "]"

    def to_lists(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]


def _copy_rows(M: DenseMatrix) -> list[list]:
    return [list(r) for r in M.rows]


def _require_square(M: DenseMatrix):
    if not M.is_square():
        raise NonSquare(f"{M.nrows}x{M.ncols} matrix is not square")


# ----------------------------------------------------------------------
# Fraction-free LU
# ----------------------------------------------------------------------
@dataclass
class FFLUResult:
    rank: int
    permutation: list[int]
    U: DenseMatrix
    det_value: RingElement
    pivot_cols: list[int] = field(default_factory=list)


def fflu(M: DenseMatrix) -> FFLUResult:
    """Bareiss fraction-free elimination with row pivoting.

    Each update (p*a_ij - a_ic*a_rj) / prev is an exact division.  Over a
    field the previous pivot is inverted once per step instead.
    """
    R = M.base
    n, m = M.nrows, M.ncols
    A = _copy_rows(M)
    perm = list(range(n))
    sign = 1
    prev = R.one()
    prev_inv = prev
    r = 0
    pivots: list[int] = []
    dot = R._dot
    field_mode = R.is_field
    for c in range(m):
        if r == n:
            break
        piv = next((i for i in range(r, n) if not A[i][c].is_zero()), None)
        if piv is None:
            if not R.is_domain and not prev.is_one():
                # a zero column only certifies vanishing minors when the
                # previous pivot is not a zero divisor
                prev.inverse()
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            perm[r], perm[piv] = perm[piv], perm[r]
            sign = -sign
        p = A[r][c]
        row_r = A[r]
        for i in range(r + 1, n):
            row_i = A[i]
            mc = row_i[c]._neg()
            for j in range(c + 1, m):
                v = dot((p, mc), (row_i[j], row_r[j]))
                if prev.is_one():
                    row_i[j] = v
                elif field_mode:
                    row_i[j] = v._mul(prev_inv)
                else:
                    row_i[j] = v.divexact(prev)
            row_i[c] = R.zero()
        pivots.append(c)
        prev = p
        if field_mode and r + 1 < n:
            prev_inv = p.inverse()
        r += 1
    U = DenseMatrix(M.parent, A)
    if n == m and r == n:
        det = A[n - 1][n - 1] if sign > 0 else A[n - 1][n - 1]._neg()
    else:
        det = R.zero()
    return FFLUResult(rank=r, permutation=perm, U=U, det_value=det, pivot_cols=pivots)


def det(M: DenseMatrix):
    """Determinant, dispatching on the base ring."""
    from .poly.dense import PolynomialRing

    _require_square(M)
    if M.nrows == 0:
        return M.base.one()
    if isinstance(M.base, PolynomialRing):
        return det_interpolation(M)
    try:
        return fflu(M).det_value
    except (ImpossibleInverse, InexactDivision):
        return det_berkowitz(M)


def det_berkowitz(M: DenseMatrix):
    _require_square(M)
    cp = charpoly_berkowitz(M)
    c0 = cp.coeff(0)
    return c0._neg() if M.nrows & 1 else c0


def det_clow(M: DenseMatrix):
    """Division-free determinant via clow sequences, O(n^4) ring operations.

    State (h, u) after l edges: the open clow has head h and sits at u.
    A clow may step to any v > h or close back to h; closing multiplies by
    -1 and opens the next clow at a larger head.
    """
    _require_square(M)
    R = M.base
    n = M.nrows
    if n == 0:
        return R.one()
    A = M.rows
    one = R.one()
    # cur[h][u], None meaning zero
    cur = [[None] * n for _ in range(n)]
    for h in range(n):
        cur[h][h] = one
    total = R.zero()
    for l in range(n):
        nxt = [[None] * n for _ in range(n)]
        closed = [None] * n  # closed[h]: weight of sequences whose last clow had head h
        for h in range(n):
            row = cur[h]
            for u in range(h, n):
                w = row[u]
                if w is None or w.is_zero():
                    continue
                if l + 1 < n:
                    Au = A[u]
                    tgt = nxt[h]
                    for v in range(h + 1, n):
                        if Au[v].is_zero():
                            continue
                        t = w._mul(Au[v])
                        tgt[v] = t if tgt[v] is None else tgt[v]._add(t)
                if not A[u][h].is_zero():
                    t = w._mul(A[u][h])
                    closed[h] = t if closed[h] is None else closed[h]._add(t)
        if l + 1 == n:
            for c in closed:
                if c is not None:
                    total = total._sub(c)
        else:
            acc = None
            for h in range(n):
                # new heads must exceed every earlier head
                if acc is not None:
                    nxt[h][h] = acc._neg() if nxt[h][h] is None else nxt[h][h]._sub(acc)
                if closed[h] is not None:
                    acc = closed[h] if acc is None else acc._add(closed[h])
        cur = nxt
    return total._neg() if n & 1 else total


def _points(R: Ring, count: int):
    ch = R.characteristic
    if ch and ch < count:
        raise InsufficientPoints(f"{R} has fewer than {count} evaluation points")
    return [R._from_int(i) for i in range(count)]


def _fraction_field(R: Ring) -> Ring:
    if isinstance(R, IntegerRing):
        return QQ
    if R.is_field:
        return R
    return FractionField(R)


def _from_fraction(R: Ring, F: Ring, v):
    if F is R:
        return v
    if F is QQ:
        if v.den != 1:
            raise InexactDivision("interpolated coefficient is not integral")
        return R._from_int(v.num)
    return v.num.divexact(v.den)


def det_interpolation(M: DenseMatrix):
    """Determinant over R[x] by evaluation at deg_bound+1 points and
    Newton interpolation over Frac(R)."""
    _require_square(M)
    P = M.base
    R = P.base
    n = M.nrows
    if n == 0:
        return P.one()
    bound = 0
    for r in M.rows:
        d = max(x.degree() for x in r)
        if d < 0:
            return P.zero()
        bound += d
    try:
        if not R.is_domain:
            raise InsufficientPoints(f"{R} is not an integral domain")
        pts = _points(R, bound + 1)
    except InsufficientPoints:
        return det_clow(M)
    space = MatrixSpace(R, n, n)
    vals = []
    for t in pts:
        Mt = DenseMatrix(space, [[x.evaluate(t) for x in r] for r in M.rows])
        vals.append(det(Mt))
    F = _fraction_field(R)
    coeffs = newton_interpolate([F(p) for p in pts], [F(v) for v in vals], F)
    return P.from_coeffs([_from_fraction(R, F, c) for c in coeffs])


def newton_interpolate(xs, ys, F) -> list:
    """Coefficients (low to high) of the interpolating polynomial over a field."""
    n = len(xs)
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) * (xs[i] - xs[i - j]).inverse()
    coeffs = [F.zero()] * n
    # Horner on the Newton basis, highest divided difference first
    for k in range(n - 1, -1, -1):
        # coeffs <- coeffs * (x - xs[k]) + dd[k]
        new = [F.zero()] * n
        for i in range(n - 1):
            new[i + 1] = new[i + 1] + coeffs[i]
        for i in range(n):
            new[i] = new[i] - coeffs[i] * xs[k]
        new[0] = new[0] + dd[k]
        coeffs = new
    return coeffs


# ----------------------------------------------------------------------
# Characteristic polynomials
# ----------------------------------------------------------------------
def _charpoly_ring(R: Ring):
    from .poly.dense import PolynomialRing

    return PolynomialRing(R, "T")


def charpoly_berkowitz(M: DenseMatrix):
    """Division-free characteristic polynomial det(T*I - M)."""
    _require_square(M)
    R = M.base
    n = M.nrows
    P = _charpoly_ring(R)
    if n == 0:
        return P.one()
    A = M.rows
    dot = R._dot
    one = R.one()
    vect = [one, A[0][0]._neg()]  # high to low
    for r in range(1, n):
        row = A[r][:r]
        col = [A[i][r] for i in range(r)]
        q = [one, A[r][r]._neg()]
        w = col
        for _ in range(r):
            q.append(dot(row, w)._neg())
            w = [dot(A[i][:r], w) for i in range(r)]
        # lower-triangular Toeplitz (r+2)x(r+1) times vect
        new = []
        for i in range(r + 2):
            lo = max(0, i - len(q) + 1)
            hi = min(i, r)
            new.append(dot([q[i - j] for j in range(lo, hi + 1)], vect[lo : hi + 1]))
        vect = new
    return P.from_coeffs(vect[::-1])


def charpoly_hessenberg(M: DenseMatrix):
    """Charpoly via similarity reduction to upper Hessenberg form (field only)."""
    _require_square(M)
    R = M.base
    n = M.nrows
    P = _charpoly_ring(R)
    H = _copy_rows(M)
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if not H[i][j].is_zero()), None)
        if piv is None:
            continue
        if piv != j + 1:
            k = j + 1
            H[piv], H[k] = H[k], H[piv]
            for r in H:
                r[piv], r[k] = r[k], r[piv]
        try:
            inv = H[j + 1][j].inverse()
        except ImpossibleInverse:
            raise
        except NotInvertible as e:
            raise ImpossibleInverse(H[j + 1][j], H[j + 1][j]) from e
        for i in range(j + 2, n):
            if H[i][j].is_zero():
                continue
            u = H[i][j] * inv
            # row_i -= u*row_{j+1}; col_{j+1} += u*col_i
            ri, rk = H[i], H[j + 1]
            for c in range(n):
                ri[c] = ri[c] - u * rk[c]
            for r in H:
                r[j + 1] = r[j + 1] + u * r[i]
    T = P.gen()
    polys = [P.one()]
    for m in range(1, n + 1):
        p = (T - P(H[m - 1][m - 1])) * polys[m - 1]
        t = R.one()
        for i in range(1, m):
            t = t * H[m - i][m - i - 1]
            if t.is_zero():
                break
            p = p - polys[m - i - 1].scale(t * H[m - i - 1][m - 1])
        polys.append(p)
    return polys[n]


@dataclass
class DivisionStats:
    """Counts of divisions made by the fraction-free Danilevsky routine."""

    divisions: int = 0
    inexact: int = 0


def _exact(a, b, stats: DivisionStats | None):
    if stats is not None:
        stats.divisions += 1
    try:
        return a.divexact(b)
    except InexactDivision:
        if stats is not None:
            stats.inexact += 1
        raise


def charpoly_danilevsky_ff(M: DenseMatrix, stats: DivisionStats | None = None):
    """Fraction-free Danilevsky reduction to companion form.

    The iterate A_k is kept as C/d with C over the base domain and d the
    previous pivot.  A step with pivot q = C[k][k-1] first combines columns
    (scaling by q), then divides the non-pivot rows by d and the pivot row
    by d^2; both divisions are exact, and the new denominator is q.
    """
    _require_square(M)
    R = M.base
    P = _charpoly_ring(R)
    try:
        coeffs = _danilevsky(_copy_rows(M), R, stats)
    except (ImpossibleInverse, InexactDivision) as e:
        if R.is_domain:
            raise
        raise ZeroPivotUnresolvable(str(e)) from e
    return P.from_coeffs(coeffs)


def _danilevsky(C: list[list], R: Ring, stats) -> list:
    """Low-to-high charpoly coefficients of the integral matrix C."""
    n = len(C)
    if n == 0:
        return [R.one()]
    d = R.one()
    dot = R._dot
    k = n - 1
    while k >= 1:
        q = C[k][k - 1]
        if q.is_zero():
            j = next((j for j in range(k - 1) if not C[k][j].is_zero()), None)
            if j is not None:
                C[j], C[k - 1] = C[k - 1], C[j]
                for r in C:
                    r[j], r[k - 1] = r[k - 1], r[j]
                continue
            # block split: rows k.. are already companion with zeros left of k
            top = _danilevsky([row[:k] for row in C[:k]], R, stats)
            # charpoly(C11/d): coefficient i scaled by d^(k-i)
            top = [
                _exact(c, d ** (k - i), stats) if i < k else c for i, c in enumerate(top)
            ]
            bottom = _companion_coeffs(C[k][k:], d, R, stats)
            return _polymul(top, bottom, R)
        ck = C[k]
        N = []
        for row in C:
            b = row[k - 1]
            new = [dot((q, ck[j]._neg()), (row[j], b)) for j in range(n)]
            new[k - 1] = d._mul(b)
            N.append(new)
        d2 = d._mul(d)
        pivot_row = [dot(ck, [N[l][j] for l in range(n)]) for j in range(n)]
        for i in range(n):
            if i != k - 1:
                C[i] = [_exact(x, d, stats) for x in N[i]] if not d.is_one() else N[i]
        C[k - 1] = [_exact(x, d2, stats) for x in pivot_row] if not d.is_one() else pivot_row
        d = q
        k -= 1
    return _companion_coeffs(C[0], d, R, stats)


def _companion_coeffs(first_row, d, R, stats) -> list:
    """Charpoly of the companion-form block whose top row is first_row/d."""
    m = len(first_row)
    out = [R.zero()] * (m + 1)
    out[m] = R.one()
    for j, c in enumerate(first_row):
        # T^m - sum_j (c_j/d) T^(m-1-j)
        v = c._neg()
        out[m - 1 - j] = _exact(v, d, stats) if not d.is_one() else v
    return out


def _polymul(a, b, R):
    out = [R.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j]._add(x._mul(y))
    return out


# ----------------------------------------------------------------------
# Minimal polynomials
# ----------------------------------------------------------------------
@dataclass
class KrylovBasis:
    """Reduced echelon rows spanning the Krylov subspaces found so far."""

    B: list = field(default_factory=list)  # rows with pivot entry 1
    pivot_cols: list[int] = field(default_factory=list)
    generators: list[int] = field(default_factory=list)

    def reduce(self, v: list) -> list:
        v = list(v)
        for row, c in zip(self.B, self.pivot_cols):
            f = v[c]
            if not f.is_zero():
                v = [a._sub(f._mul(b)) for a, b in zip(v, row)]
        return v

    def insert(self, v: list) -> bool:
        """Add v if independent; keeps rows fully reduced.  Returns True if added."""
        v = self.reduce(v)
        c = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if c is None:
            return False
        inv = v[c].inverse()
        v = [x._mul(inv) for x in v]
        for idx, row in enumerate(self.B):
            f = row[c]
            if not f.is_zero():
                self.B[idx] = [a._sub(f._mul(b)) for a, b in zip(row, v)]
        self.B.append(v)
        self.pivot_cols.append(c)
        return True


def _local_minpoly(M: DenseMatrix, v: list, basis: KrylovBasis, P):
    """Minimal polynomial of v under M; Krylov vectors are fed into ``basis``."""
    R = M.base
    n = M.nrows
    zero, one = R.zero(), R.one()
    rows: list[tuple[list, list, int]] = []  # (vector, poly coeffs low->high, pivot)
    w = v
    k = 0
    while True:
        basis.insert(w)
        # reduce w locally while tracking the polynomial
        vec = list(w)
        poly = [zero] * k + [one]
        for rv, rp, c in rows:
            f = vec[c]
            if not f.is_zero():
                vec = [a._sub(f._mul(b)) for a, b in zip(vec, rv)]
                poly = [
                    (poly[i] if i < len(poly) else zero)._sub(f._mul(rp[i]) if i < len(rp) else zero)
                    for i in range(max(len(poly), len(rp)))
                ]
        c = next((i for i, x in enumerate(vec) if not x.is_zero()), None)
        if c is None:
            return P.from_coeffs(poly).monic()
        inv = vec[c].inverse()
        rows.append(([x._mul(inv) for x in vec], [x._mul(inv) for x in poly], c))
        w = M.mulvec(w)
        k += 1
        if k > n + 1:
            raise AssertionError("Krylov sequence failed to terminate")


def minpoly_field(M: DenseMatrix, return_basis: bool = False):
    """Minimal polynomial over a field by spinning standard basis vectors."""
    _require_square(M)
    R = M.base
    n = M.nrows
    P = _charpoly_ring(R)
    basis = KrylovBasis()
    m = P.one()
    zero, one = R.zero(), R.one()
    while len(basis.B) < n:
        j = None
        for cand in range(n):
            e = [zero] * n
            e[cand] = one
            if any(not x.is_zero() for x in basis.reduce(e)):
                j = cand
                break
        e = [zero] * n
        e[j] = one
        basis.generators.append(j)
        mi = _local_minpoly(M, e, basis, P)
        g = m.gcd(mi)
        m = (m * mi).divrem(g)[0].monic()
    return (m, basis) if return_basis else m


@dataclass
class MinpolyCertificate:
    primes: list[int]
    generators: list[int]
    verified: bool


def _reduce_mod(M: DenseMatrix, p: int) -> DenseMatrix:
    F = IntegerModRing(p)
    return DenseMatrix(
        MatrixSpace(F, M.nrows, M.ncols),
        [[F._from_int(x.value) for x in r] for r in M.rows],
    )


def _verify_annihilates(M: DenseMatrix, coeffs: list[int], gens: list[int]) -> bool:
    """Check m(M) e_j = 0 over ZZ by Horner with matrix-vector products."""
    n = M.nrows
    A = [[x.value for x in r] for r in M.rows]
    for j in gens:
        w = [0] * n
        for c in reversed(coeffs):
            w = [sum(a * b for a, b in zip(row, w)) for row in A]
            w[j] += c
        if any(w):
            return False
    return True


def minpoly_integer(M: DenseMatrix, certificate: bool = False):
    """Minimal polynomial of an integer matrix by multimodular spinning.

    Primes descend from 2^62.  A prime giving a smaller degree than the
    current maximum is discarded; a larger degree restarts the CRT.  Once
    the symmetric lift is unchanged by one more prime, m(M) e_j = 0 is
    checked exactly for the generators e_j recorded at the first retained
    prime, which proves m is the minimal polynomial.
    """
    _require_square(M)
    if not isinstance(M.base, IntegerRing):
        raise InvalidParameter("minpoly_integer needs an integer matrix")
    P = _charpoly_ring(ZZ)
    n = M.nrows
    if n == 0:
        return (P.one(), MinpolyCertificate([], [], True)) if certificate else P.one()
    deg = -1
    residues: list[int] = []
    modulus = 1
    gens: list[int] = []
    used: list[int] = []
    prev = None
    for p in prime_stream(1 << 62):
        mp, basis = minpoly_field(_reduce_mod(M, p), return_basis=True)
        d = mp.degree()
        if d < deg:
            continue
        coeffs = [c.value for c in mp.coeffs]
        if d > deg:
            deg, residues, modulus = d, coeffs, p
            gens = list(basis.generators)
            used = [p]
            prev = [symmetric_mod(c, p) for c in coeffs]
            continue
        residues = [crt_pair(r, modulus, c, p)[0] for r, c in zip(residues, coeffs)]
        modulus *= p
        residues = [r % modulus for r in residues]
        used.append(p)
        lift = [symmetric_mod(r, modulus) for r in residues]
        if lift == prev and _verify_annihilates(M, lift, gens):
            poly = P.from_coeffs(lift)
            if certificate:
                return poly, MinpolyCertificate(used, gens, True)
            return poly
        prev = lift
    raise AssertionError("prime stream exhausted")


def companion_matrix(poly, base: Ring | None = None) -> DenseMatrix:
    """Companion matrix of a monic polynomial (ones on the subdiagonal,
    negated coefficients in the last column)."""
    R = base if base is not None else poly.parent.base
    n = poly.degree()
    z, one = R.zero(), R.one()
    rows = [[z] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = one
    for i in range(n):
        rows[i][n - 1] = R(poly.coeff(i))._neg()
    return DenseMatrix(MatrixSpace(R, n, n), rows)


# ----------------------------------------------------------------------
# JSON
# ----------------------------------------------------------------------
def matrix_to_json(M: DenseMatrix) -> str:
    from .descriptors import ring_descriptor

    return json.dumps({"ring": ring_descriptor(M.base), "rows": M.to_lists()})


def matrix_from_json(text: str) -> DenseMatrix:
    from .descriptors import ring_from_descriptor

    data = json.loads(text)
    R = ring_from_descriptor(data["ring"])
    rows = data["rows"]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    return MatrixSpace(R, nr, nc).from_rows([[R.parse(s) for s in r] for r in rows])
