"""Dense polynomials over GF(p) as raw int lists (low degree first).

Used where speed matters more than the parent/element model: finite field
construction, irreducibility tests and the factorisations behind prime
ideal decomposition.  The zero polynomial is ``[]``.
"""
from __future__ import annotations

from .intarith import factor_small
from .prng import SplitMix64


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def norm(a, p: int) -> list[int]:
    return trim([c % p for c in a])


def add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def scale(a, c, p):
    c %= p
    return trim([x * c % p for x in a]) if c else []


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(a) <= db:
        return [], trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return trim(q), trim(a[:db])


def rem(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd(a, b, p):
    a, b = norm(a, p), norm(b, p)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def xgcd(a, b, p):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = norm(a, p), norm(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def mulmod(a, b, m, p):
    return rem(mul(a, b, p), m, p)


def powmod(a, e: int, m, p):
    result = [1]
    base = rem(a, m, p)
    while e:
        if e & 1:
            result = mulmod(result, base, m, p)
        e >>= 1
        if e:
            base = mulmod(base, base, m, p)
    return rem(result, m, p)


def deriv(a, p):
    return trim([(i * c) % p for i, c in enumerate(a)][1:])


def evaluate(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def frobenius_powers(m, p, count):
    """[x^(p^1), x^(p^2), ...] mod m, ``count`` entries."""
    out = []
    cur = [0, 1]
    for _ in range(count):
        cur = powmod(cur, p, m, p)
        out.append(cur)
    return out


def is_irreducible(m, p: int) -> bool:
    """Rabin's test over GF(p)."""
    m = norm(m, p)
    d = len(m) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    m = monic(m, p)
    x = [0, 1]
    xq = frobenius_powers(m, p, d)
    if xq[d - 1] != rem(x, m, p):
        return False
    for r in factor_small(d):
        h = sub(xq[d // r - 1], x, p)
        if len(gcd(m, h, p)) > 1:
            return False
    return True


def random_irreducible(p: int, k: int, seed: int = 0) -> list[int]:
    """Seeded random search for a monic irreducible of degree k."""
    rng = SplitMix64(seed ^ (p * 1_000_003 + k))
    while True:
        cand = [rng.randbelow(p) for _ in range(k)] + [1]
        if k > 1 and cand[0] == 0:
            continue
        if is_irreducible(cand, p):
            return cand


def squarefree_decomposition(f, p: int) -> list[tuple[list[int], int]]:
    """Return [(g_i, e_i)] with f = lc * prod g_i^e_i, g_i squarefree, coprime."""
    f = monic(norm(f, p), p)
    out: list[tuple[list[int], int]] = []

    def rec(f, mult):
        if len(f) <= 1:
            return
        df = deriv(f, p)
        if not df:
            # f is a p-th power: f(x) = g(x^p), and over GF(p) g^(1/p) = g
            g = [f[i] for i in range(0, len(f), p)]
            rec(g, mult * p)
            return
        c = gcd(f, df, p)
        w = divmod_(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = gcd(w, c, p)
            z = divmod_(w, y, p)[0]
            if len(z) > 1:
                out.append((monic(z, p), i * mult))
            i += 1
            w = y
            c = divmod_(c, y, p)[0]
        if len(c) > 1:
            g = [c[j] for j in range(0, len(c), p)]
            rec(g, mult * p)

    rec(f, 1)
    return out


def distinct_degree(f, p: int, max_degree: int | None = None):
    """Split squarefree monic f into [(product of degree-d factors, d)].

    With ``max_degree`` set, stops early; the unsplit remainder is not
    returned (callers only wanting small-degree factors use this).
    """
    f = monic(norm(f, p), p)
    out = []
    x = [0, 1]
    h = x
    d = 0
    while len(f) > 1:
        d += 1
        if max_degree is not None and d > max_degree:
            break
        if 2 * d > len(f) - 1:
            out.append((f, len(f) - 1))
            break
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = divmod_(f, g, p)[0]
            h = rem(h, f, p)
    if max_degree is not None:
        out = [(g, d) for g, d in out if d <= max_degree]
    return out


def equal_degree(f, d: int, p: int, rng: SplitMix64) -> list[list[int]]:
    """Cantor-Zassenhaus split of a product of distinct degree-d factors."""
    f = monic(norm(f, p), p)
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = trim([rng.randbelow(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t = a
            acc = a
            for _ in range(d - 1):
                t = mulmod(t, t, f, p)
                acc = add(acc, t, p)
            b = acc
        else:
            b = sub(powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = gcd(f, b, p)
        if 0 < len(g) - 1 < n:
            return equal_degree(g, d, p, rng) + equal_degree(divmod_(f, g, p)[0], d, p, rng)


def factor(f, p: int, seed: int = 0, max_degree: int | None = None):
    """Monic irreducible factors with multiplicity: [(g, e)], sorted."""
    rng = SplitMix64(seed)
    out = []
    for g, e in squarefree_decomposition(f, p):
        for h, d in distinct_degree(g, p, max_degree):
            for q in equal_degree(h, d, p, rng):
                out.append((q, e))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1]))
    return out
