"""Integer helpers: primality, CRT, small-prime factoring."""
from __future__ import annotations

from math import gcd, isqrt

# deterministic for n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Miller-Rabin with fixed bases; exact below 3.3e24, probable prime above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prev_prime(n: int) -> int:
    """Largest prime strictly below n."""
    n -= 1
    while n >= 2:
        if is_prime(n):
            return n
        n -= 1
    raise ValueError("no prime below 2")


def prime_stream(start: int):
    """Primes in decreasing order, strictly below ``start``."""
    p = start
    while True:
        p = prev_prime(p)
        yield p


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i, v in enumerate(sieve) if v]


SMALL_PRIMES = primes_upto(10_000)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with u*a + v*b = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    """Combine x = r1 mod m1, x = r2 mod m2 for coprime moduli."""
    inv = pow(m1, -1, m2)
    t = (r2 - r1) * inv % m2
    return r1 + m1 * t, m1 * m2


def symmetric_mod(x: int, m: int) -> int:
    x %= m
    return x - m if 2 * x > m else x


def factor_small(n: int, primes=SMALL_PRIMES) -> dict[int, int]:
    """Trial division over the small-prime table.

    Raises ValueError if a cofactor > 1 survives, since full factoring is
    out of scope.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in primes:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n <= primes[-1] ** 2 or is_prime(n):
            out[n] = out.get(n, 0) + 1
        else:
            raise ValueError(f"cofactor {n} is beyond the trial-division table")
    return out


def euler_phi(k: int) -> int:
    r = k
    for p in factor_small(k):
        r = r // p * (p - 1)
    return r


def lcm(a: int, b: int) -> int:
    return abs(a // gcd(a, b) * b) if a and b else 0
