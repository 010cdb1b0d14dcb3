"""Integer polynomials as plain int lists (low degree first).

Kronecker substitution for products, and a multimodular resultant used for
norms in high-degree number fields.
"""
from __future__ import annotations

from .. import gfpoly
from ..intarith import crt_pair, prime_stream, symmetric_mod

_KRONECKER_MIN = 12


def mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return out
    return _kronecker(a, b)


def _kronecker(a, b):
    ma = max(abs(x) for x in a)
    mb = max(abs(x) for x in b)
    bound = ma * mb * min(len(a), len(b))
    s = bound.bit_length() + 2
    pa = 0
    for x in reversed(a):
        pa = (pa << s) + x
    pb = 0
    for x in reversed(b):
        pb = (pb << s) + x
    v = pa * pb
    n = len(a) + len(b) - 1
    out = [0] * n
    mask = (1 << s) - 1
    half = 1 << (s - 1)
    full = 1 << s
    for i in range(n):
        low = v & mask
        if low >= half:
            low -= full
        out[i] = low
        v = (v - low) >> s
    return out


def norm2_sq(a) -> int:
    return sum(x * x for x in a)


def resultant_modp(a: list[int], b: list[int], p: int) -> int:
    """res(a, b) mod p by the Euclidean remainder sequence over GF(p)."""
    a = gfpoly.norm(a, p)
    b = gfpoly.norm(b, p)
    if not a or not b:
        return 0
    res = 1
    while True:
        m, n = len(a) - 1, len(b) - 1
        if n == 0:
            return res * pow(b[0], m, p) % p
        r = gfpoly.rem(a, b, p)
        if not r:
            return 0
        k = len(r) - 1
        t = pow(b[-1], m - k, p)
        if (m * n) & 1:
            t = -t
        res = res * t % p
        a, b = b, r


def resultant_bound_bits(a: list[int], b: list[int]) -> int:
    """Bits of the Hadamard bound ||a||^deg b * ||b||^deg a."""
    da, db = len(a) - 1, len(b) - 1
    return (db * norm2_sq(a).bit_length() + da * norm2_sq(b).bit_length()) // 2 + 2


def resultant(a: list[int], b: list[int]) -> int:
    """Exact integer resultant by CRT over primes below 2^62."""
    while a and a[-1] == 0:
        a = a[:-1]
    while b and b[-1] == 0:
        b = b[:-1]
    if not a or not b:
        return 0
    bits = resultant_bound_bits(a, b)
    r, m = 0, 1
    for p in prime_stream(1 << 62):
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        rp = resultant_modp(a, b, p)
        r, m = crt_pair(r, m, rp, p)
        if m.bit_length() > bits + 1:
            return symmetric_mod(r, m)
    raise AssertionError("unreachable")


def inverse_cofactor(f: list[int], a: list[int]) -> tuple[list[int], int]:
    """(u, r) with u*a = r mod f and r = res(f, a), for monic f coprime to a.

    u is the integral adjugate (the product of the other conjugates when f
    is irreducible), so a^-1 = u / r.  Recovered by CRT like ``resultant``.
    """
    while a and a[-1] == 0:
        a = a[:-1]
    if not a:
        raise ZeroDivisionError("zero has no inverse")
    n = len(f) - 1
    bits = resultant_bound_bits(f, a) + 1
    r, m = 0, 1
    u = [0] * n
    for p in prime_stream(1 << 62):
        rp = resultant_modp(f, a, p)
        if rp == 0:
            continue
        _, s, _ = gfpoly.xgcd(a, f, p)
        s = s + [0] * (n - len(s))
        inv = pow(m, -1, p)
        for j in range(n):
            u[j] += m * ((rp * s[j] - u[j]) * inv % p)
        r += m * ((rp - r) * inv % p)
        m *= p
        if m.bit_length() > bits + 1:
            return [symmetric_mod(x, m) for x in u], symmetric_mod(r, m)
    raise AssertionError("unreachable")
