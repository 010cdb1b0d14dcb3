"""Benchmark programs with fingerprints and built-in oracle checks."""
from __future__ import annotations

import csv
import hashlib
import io
import json
import time
from dataclasses import asdict, dataclass, field

from .config import (
    FatemanConfig,
    IdealBenchConfig,
    MinpolyBenchConfig,
    NFDetConfig,
    PearceConfig,
    ResultantTowerConfig,
    TorsionDemoConfig,
    as_params,
)
from .errors import AlgebraError
from .prng import SplitMix64
from .rings import ZZ, FiniteField, ResidueRing, intern


class OracleMismatch(AlgebraError):
    """A benchmark's cross-check disagreed with the main computation."""


@dataclass
class BenchReport:
    name: str
    params: dict
    seconds: float
    fingerprint: str
    oracle_checked: bool
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("details")
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "params", "seconds", "fingerprint", "oracle_checked"])
        w.writerow(
            [
                self.name,
                json.dumps(self.params, sort_keys=True),
                repr(self.seconds),
                self.fingerprint,
                str(self.oracle_checked).lower(),
            ]
        )
        return buf.getvalue()

    @classmethod
    def from_json(cls, text: str) -> "BenchReport":
        return cls(**json.loads(text))

    @classmethod
    def from_csv(cls, text: str) -> "BenchReport":
        rows = list(csv.reader(io.StringIO(text)))
        rec = dict(zip(rows[0], rows[1]))
        return cls(
            name=rec["name"],
            params=json.loads(rec["params"]),
            seconds=float(rec["seconds"]),
            fingerprint=rec["fingerprint"],
            oracle_checked=rec["oracle_checked"] == "true",
        )


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _check(ok: bool, what: str):
    if not ok:
        raise OracleMismatch(what)


def _mpoly(vars):
    from .poly.sparse import MPolyRing

    return intern(MPolyRing(ZZ, tuple(vars)))


# ----------------------------------------------------------------------
# Polynomial benchmarks
# ----------------------------------------------------------------------
def cmd_fateman(cfg: FatemanConfig = FatemanConfig()) -> BenchReport:
    """f * (f + 1) with f = (1 + x + y + z + t)^n over ZZ."""
    from .poly.sparse import naive_mul

    P = _mpoly("xyzt")
    x, y, z, t = P.gens()
    start = time.perf_counter()
    f = (1 + x + y + z + t) ** cfg.n
    g = f + 1
    h = f * g
    seconds = time.perf_counter() - start
    checked = False
    if cfg.n <= cfg.oracle_max_n:
        _check(h == naive_mul(f, g), "heap product differs from naive product")
        checked = True
    return BenchReport("fateman", as_params(cfg), seconds, str(len(h)), checked)


def pearce_inputs(n: int):
    P = _mpoly("xyztu")
    x, y, z, t, u = P.gens()
    f = (1 + x + y + 2 * z**2 + 3 * t**3 + 5 * u**5) ** n
    g = (1 + u + t + 2 * z**2 + 3 * y**3 + 5 * x**5) ** n
    return f, g


def cmd_pearce(cfg: PearceConfig = PearceConfig()) -> BenchReport:
    from .poly.sparse import naive_mul

    start = time.perf_counter()
    f, g = pearce_inputs(cfg.n)
    h = f * g
    seconds = time.perf_counter() - start
    checked = False
    if cfg.n <= cfg.oracle_max_n:
        _check(h == naive_mul(f, g), "heap product differs from naive product")
        checked = True
    return BenchReport("pearce", as_params(cfg), seconds, str(len(h)), checked)


def tower_rings(cfg: ResultantTowerConfig = ResultantTowerConfig()):
    """GF(p^k) -> [y] -> mod y^3 + 3xy + 1 -> [z]."""
    from .poly.dense import PolynomialRing

    R = intern(FiniteField(cfg.p, cfg.k, "x", seed=cfg.field_seed))
    S = intern(PolynomialRing(R, "y"))
    T = intern(ResidueRing(S, S.parse("y^3 + 3*x*y + 1")))
    U = intern(PolynomialRing(T, "z"))
    return R, S, T, U


def tower_inputs(cfg: ResultantTowerConfig):
    *_, U = tower_rings(cfg)
    f = U.parse("(3*y^2+y+x)*z^2 + ((x+2)*y^2+x+1)*z + 4*x*y + 3")
    g = U.parse("(7*y^2-y+2*x+7)*z^2 + (3*y^2+4*x+1)*z + (2*x+1)*y + 1")
    s = f**cfg.e
    t = (s + g) ** cfg.e
    return s, t


def cmd_resultant_tower(cfg: ResultantTowerConfig = ResultantTowerConfig()) -> BenchReport:
    from .poly.dense import resultant, resultant_sylvester

    start = time.perf_counter()
    s, t = tower_inputs(cfg)
    r = resultant(s, t)
    seconds = time.perf_counter() - start
    checked = False
    if cfg.e <= cfg.oracle_max_e:
        _check(r == resultant_sylvester(s, t), "PRS resultant differs from Sylvester determinant")
        checked = True
    return BenchReport("resultant-tower", as_params(cfg), seconds, digest(str(r)), checked,
                       details={"result": r})


# ----------------------------------------------------------------------
# Matrix benchmarks
# ----------------------------------------------------------------------
def nf_det_matrix(cfg: NFDetConfig):
    from .matrices import MatrixSpace
    from .numberfield import NumberField

    K = intern(NumberField(list(cfg.defining_poly), "a"))
    rng = SplitMix64(cfg.seed)
    b = cfg.entry_bound
    rows = [
        [K.from_ints([rng.randint(-b, b) for _ in range(K.d)]) for _ in range(cfg.dim)]
        for _ in range(cfg.dim)
    ]
    return MatrixSpace(K, cfg.dim, cfg.dim).from_rows(rows)


def cmd_nf_det(cfg: NFDetConfig = NFDetConfig()) -> BenchReport:
    from .matrices import det, det_berkowitz

    M = nf_det_matrix(cfg)
    start = time.perf_counter()
    d = det(M)
    seconds = time.perf_counter() - start
    checked = False
    if cfg.dim <= cfg.oracle_max_dim:
        _check(d == det_berkowitz(M), "fflu determinant differs from Berkowitz")
        checked = True
    return BenchReport("nf-det", as_params(cfg), seconds, digest(str(d)), checked,
                       details={"det": d})


def structured_minpoly_matrix(dim: int, rng: SplitMix64, coeff_bound: int = 5, steps=None):
    """A conjugate U B U^-1 of B = diag(C, C, ..., c*I) with C the companion
    matrix of m = (T - c) h; returns (matrix, m as a coefficient list)."""
    from .matrices import MatrixSpace

    deg = max(1, dim // 2)
    c = rng.randint(-coeff_bound, coeff_bound)
    h = [rng.randint(-coeff_bound, coeff_bound) for _ in range(deg - 1)] + [1]
    m = [0] * (deg + 1)
    for i, hi in enumerate(h):
        m[i + 1] += hi
        m[i] -= c * hi
    B = [[0] * dim for _ in range(dim)]
    pos = 0
    while pos + deg <= dim:
        for i in range(1, deg):
            B[pos + i][pos + i - 1] = 1
        for i in range(deg):
            B[pos + i][pos + deg - 1] = -m[i]
        pos += deg
    for i in range(pos, dim):
        B[i][i] = c
    steps = steps if steps is not None else 2 * dim
    for _ in range(steps):
        i = rng.randbelow(dim)
        j = rng.randbelow(dim - 1)
        j += j >= i
        k = rng.choice((-1, 1))
        B[i] = [a + k * b for a, b in zip(B[i], B[j])]
        for r in range(dim):
            B[r][j] -= k * B[r][i]
    M = MatrixSpace(ZZ, dim, dim).from_rows([[ZZ(v) for v in r] for r in B])
    return M, m


def cmd_minpoly(cfg: MinpolyBenchConfig = MinpolyBenchConfig()) -> BenchReport:
    from .matrices import minpoly_integer

    M, m = structured_minpoly_matrix(
        cfg.dim, SplitMix64(cfg.seed), cfg.coeff_bound, cfg.conjugation_steps
    )
    start = time.perf_counter()
    poly, cert = minpoly_integer(M, certificate=True)
    seconds = time.perf_counter() - start
    _check([c.value for c in poly.coeffs] == m, "minimal polynomial differs from construction")
    _check(cert.verified, "annihilation check failed")
    fp = f"degree={poly.degree()} verified={str(cert.verified).lower()}"
    return BenchReport("minpoly", as_params(cfg), seconds, fp, True, details={"minpoly": poly})


# ----------------------------------------------------------------------
# Ideals
# ----------------------------------------------------------------------
def ideal_bench_setup(cfg: IdealBenchConfig):
    from .ideals import Order, small_prime_ideals
    from .numberfield import NumberField

    K = intern(NumberField([2] + [0] * (cfg.n - 1) + [1], "x"))
    O = Order(K, is_maximal=True)
    primes = small_prime_ideals(O, cfg.bound)
    rng = SplitMix64(cfg.seed)
    sample = [rng.choice(primes) for _ in range(cfg.count)]
    return O, sample


def cmd_ideal(cfg: IdealBenchConfig = IdealBenchConfig()) -> BenchReport:
    from .ideals import basis_product_hnf, ideal_norm

    O, sample = ideal_bench_setup(cfg)
    start = time.perf_counter()
    A = sample[0]
    for P in sample[1:]:
        A = A * P
    N = ideal_norm(A, use_cache=False)
    seconds = time.perf_counter() - start
    expected = 1
    for P in sample:
        expected *= P.norm()
    _check(N == expected, "norm of the product differs from the product of norms")
    checked = True
    if cfg.n == 16 and cfg.count <= cfg.hnf_check_max_count:
        H = sample[0].hnf()
        for P in sample[1:]:
            H = basis_product_hnf(O, H, P.hnf())
        _check(H == A.hnf(), "two-generator product HNF differs from basis-level product")
    return BenchReport("ideal", as_params(cfg), seconds, str(N), checked,
                       details={"ideal": A})


# ----------------------------------------------------------------------
# Torsion demo
# ----------------------------------------------------------------------
def cmd_torsion_demo(cfg: TorsionDemoConfig = TorsionDemoConfig()) -> BenchReport:
    from .balls import is_torsion
    from .numberfield import NumberField

    K = intern(NumberField(cfg.field, "x"))
    alpha = K.parse(cfg.elem)
    start = time.perf_counter()
    res = is_torsion(alpha)
    seconds = time.perf_counter() - start
    checked = False
    if res.is_torsion:
        _check((alpha**res.order).is_one(), "reported order does not annihilate")
        checked = True
    return BenchReport("torsion", as_params(cfg), seconds, str(res), checked)
