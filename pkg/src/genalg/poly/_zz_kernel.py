"""Integer sparse products through the compiled multimodular heap kernel."""
from __future__ import annotations

import numpy as np

from ..intarith import prime_stream
from . import _kernels

_PRIME_TOP = 1 << 31
_PRIMES: list[int] = []


def _primes(count: int) -> list[int]:
    if len(_PRIMES) < count:
        it = prime_stream(_PRIME_TOP)
        _PRIMES.clear()
        for p in it:
            _PRIMES.append(p)
            if len(_PRIMES) >= count:
                break
    return _PRIMES[:count]


def _residues(values: list[int], primes: list[int]) -> np.ndarray:
    out = np.empty((len(primes), len(values)), np.int64)
    for t, p in enumerate(primes):
        out[t] = [v % p for v in values]
    return out


def mul_zz(f, g):
    from .sparse import SparsePoly

    R = f.parent.base
    fv = [c.value for c in f.coeffs]
    gv = [c.value for c in g.coeffs]
    bound = 2 * sum(abs(v) for v in fv) * max(abs(v) for v in gv) + 1
    primes: list[int] = []
    m = 1
    for p in _primes(64):
        primes.append(p)
        m *= p
        if m > bound:
            break
    while m <= bound:
        primes = _primes(len(primes) * 2)
        m = 1
        for p in primes:
            m *= p
    pr = np.array(primes, np.int64)
    keys, res = _kernels.heap_mul_modular(
        np.array(f.keys, np.int64), _residues(fv, primes),
        np.array(g.keys, np.int64), _residues(gv, primes), pr,
    )
    r = len(primes)
    if r == 1:
        p = primes[0]
        half = p // 2
        vals = [int(x) - p if x > half else int(x) for x in res[0]]
    else:
        invs = np.zeros((r, r), np.int64)
        for i in range(r):
            for j in range(i):
                invs[i, j] = pow(primes[j], -1, primes[i])
        digits = _kernels.garner_digits(res, pr, invs).tolist()
        half = m // 2
        vals = []
        for c in range(len(digits[0])):
            v = 0
            for i in range(r - 1, -1, -1):
                v = v * primes[i] + digits[i][c]
            vals.append(v - m if v > half else v)
    mk = R._from_int
    return SparsePoly(f.parent, keys.tolist(), [mk(v) for v in vals], f.bits)
