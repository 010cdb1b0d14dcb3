"""Compiled heap multiplication for integer coefficients.

Monomials are packed int64 keys (larger key = larger monomial).  Each
coefficient is carried as residues modulo several primes below 2^31 so
that all arithmetic stays in machine words; the caller reconstructs the
integers by CRT.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _sift_up(hk, hi, hj, pos):
    k = hk[pos]
    i = hi[pos]
    j = hj[pos]
    while pos > 0:
        parent = (pos - 1) >> 1
        if hk[parent] >= k:
            break
        hk[pos] = hk[parent]
        hi[pos] = hi[parent]
        hj[pos] = hj[parent]
        pos = parent
    hk[pos] = k
    hi[pos] = i
    hj[pos] = j


@njit(cache=True)
def _sift_down(hk, hi, hj, size):
    k = hk[0]
    i = hi[0]
    j = hj[0]
    pos = 0
    while True:
        c = 2 * pos + 1
        if c >= size:
            break
        if c + 1 < size and hk[c + 1] > hk[c]:
            c += 1
        if hk[c] <= k:
            break
        hk[pos] = hk[c]
        hi[pos] = hi[c]
        hj[pos] = hj[c]
        pos = c
    hk[pos] = k
    hi[pos] = i
    hj[pos] = j


@njit(cache=True)
def heap_mul_modular(fk, fc, gk, gc, primes):
    """Product of f and g (keys descending); fc, gc are (r, n) residue arrays.

    At most len(f) heap entries are live: the pointer for f-term i+1 is
    only inserted once f-term i has been paired with the first g-term.
    """
    nf = fk.shape[0]
    ng = gk.shape[0]
    r = primes.shape[0]
    cap = max(16, nf + ng)
    ok = np.empty(cap, np.int64)
    oc = np.empty((r, cap), np.int64)
    n_out = 0
    hk = np.empty(nf + 1, np.int64)
    hi = np.empty(nf + 1, np.int64)
    hj = np.empty(nf + 1, np.int64)
    si = np.empty(nf + 1, np.int64)
    sj = np.empty(nf + 1, np.int64)
    acc = np.zeros(r, np.int64)
    size = 0
    hk[0] = fk[0] + gk[0]
    hi[0] = 0
    hj[0] = 0
    size = 1
    while size > 0:
        key = hk[0]
        for t in range(r):
            acc[t] = 0
        ns = 0
        while size > 0 and hk[0] == key:
            i = hi[0]
            j = hj[0]
            for t in range(r):
                acc[t] = (acc[t] + fc[t, i] * gc[t, j]) % primes[t]
            si[ns] = i
            sj[ns] = j
            ns += 1
            size -= 1
            if size > 0:
                hk[0] = hk[size]
                hi[0] = hi[size]
                hj[0] = hj[size]
                _sift_down(hk, hi, hj, size)
        for s in range(ns):
            i = si[s]
            j = sj[s]
            if j == 0 and i + 1 < nf:
                hk[size] = fk[i + 1] + gk[0]
                hi[size] = i + 1
                hj[size] = 0
                size += 1
                _sift_up(hk, hi, hj, size - 1)
            if j + 1 < ng:
                hk[size] = fk[i] + gk[j + 1]
                hi[size] = i
                hj[size] = j + 1
                size += 1
                _sift_up(hk, hi, hj, size - 1)
        nz = False
        for t in range(r):
            if acc[t] != 0:
                nz = True
        if nz:
            if n_out == cap:
                cap *= 2
                ok2 = np.empty(cap, np.int64)
                oc2 = np.empty((r, cap), np.int64)
                ok2[:n_out] = ok[:n_out]
                oc2[:, :n_out] = oc[:, :n_out]
                ok = ok2
                oc = oc2
            ok[n_out] = key
            for t in range(r):
                oc[t, n_out] = acc[t]
            n_out += 1
    return ok[:n_out], oc[:, :n_out]


@njit(cache=True)
def garner_digits(res, primes, invs):
    """Mixed-radix digits v with x = v0 + v1*p0 + v2*p0*p1 + ...

    invs[i, j] = inverse of primes[j] modulo primes[i] (j < i).
    """
    r, n = res.shape
    out = np.empty((r, n), np.int64)
    for c in range(n):
        for i in range(r):
            p = primes[i]
            x = res[i, c] % p
            for j in range(i):
                x = ((x - out[j, c]) % p) * invs[i, j] % p
            out[i, c] = x
    return out
