"""Compiled kernels for arithmetic in the 2^64-element field.

Multiplication is carry-less (polynomial) multiplication of 64-bit words
followed by reduction modulo X^64 + X^4 + X^3 + X + 1.  Keeping these in a
separate module lets the pure-GF(2) paths avoid the numba import.
"""
import numpy as np
from numba import njit, uint64


@njit(uint64(uint64, uint64), cache=True, nogil=True)
def mul(a, b):
    lo = uint64(0)
    hi = uint64(0)
    for k in range(64):
        if (b >> uint64(k)) & uint64(1):
            lo ^= a << uint64(k)
            if k > 0:
                hi ^= a >> uint64(64 - k)
    # fold the high word through X^64 = X^4 + X^3 + X + 1
    t_lo = (hi << uint64(4)) ^ (hi << uint64(3)) ^ (hi << uint64(1)) ^ hi
    t_hi = (hi >> uint64(60)) ^ (hi >> uint64(61)) ^ (hi >> uint64(63))
    lo ^= t_lo ^ (t_hi << uint64(4)) ^ (t_hi << uint64(3)) ^ (t_hi << uint64(1)) ^ t_hi
    return lo


@njit(uint64(uint64), cache=True, nogil=True)
def inv(a):
    # a^(2^64 - 2) by square and multiply
    result = uint64(1)
    base = a
    e = uint64(0xFFFFFFFFFFFFFFFE)
    while e:
        if e & uint64(1):
            result = mul(result, base)
        base = mul(base, base)
        e >>= uint64(1)
    return result


@njit(uint64(uint64[:, :]), cache=True, nogil=True)
def det_u64(a):
    n = a.shape[0]
    det = uint64(1)
    for c in range(n):
        p = -1
        for r in range(c, n):
            if a[r, c] != uint64(0):
                p = r
                break
        if p < 0:
            return uint64(0)
        if p != c:
            for j in range(c, n):
                tmp = a[c, j]
                a[c, j] = a[p, j]
                a[p, j] = tmp
        piv = a[c, c]
        det = mul(det, piv)
        piv_inv = inv(piv)
        for r in range(c + 1, n):
            if a[r, c] != uint64(0):
                f = mul(a[r, c], piv_inv)
                a[r, c] = uint64(0)
                for j in range(c + 1, n):
                    if a[c, j] != uint64(0):
                        a[r, j] ^= mul(f, a[c, j])
    return det


@njit(cache=True, nogil=True)
def rank_u64(a):
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        p = -1
        for i in range(r, nrows):
            if a[i, c] != uint64(0):
                p = i
                break
        if p < 0:
            continue
        if p != r:
            for j in range(c, ncols):
                tmp = a[r, j]
                a[r, j] = a[p, j]
                a[p, j] = tmp
        piv_inv = inv(a[r, c])
        for i in range(r + 1, nrows):
            if a[i, c] != uint64(0):
                f = mul(a[i, c], piv_inv)
                a[i, c] = uint64(0)
                for j in range(c + 1, ncols):
                    if a[r, j] != uint64(0):
                        a[i, j] ^= mul(f, a[r, j])
        r += 1
        if r == nrows:
            break
    return r


@njit(cache=True, nogil=True)
def power_table(vals, count):
    n = vals.shape[0]
    table = np.empty((n, count), dtype=np.uint64)
    for q in range(n):
        acc = uint64(1)
        for e in range(count):
            table[q, e] = acc
            acc = mul(acc, vals[q])
    return table


@njit(cache=True, nogil=True)
def fill_evaluated(row_knot, row_alpha, row_beta, col_i, col_j, xs, ys, out):
    """Fill the evaluated interpolation matrix in place.

    Entry (r, c) is binom(i, alpha) * binom(j, beta) * x^(i-alpha) * y^(j-beta)
    with the binomials taken mod 2 (Lucas: submask test) and the powers taken
    in the 2^64-element field.
    """
    max_i = 0
    max_j = 0
    for c in range(col_i.shape[0]):
        if col_i[c] > max_i:
            max_i = col_i[c]
        if col_j[c] > max_j:
            max_j = col_j[c]
    xpow = power_table(xs, max_i + 1)
    ypow = power_table(ys, max_j + 1)
    for r in range(row_knot.shape[0]):
        q = row_knot[r]
        alpha = row_alpha[r]
        beta = row_beta[r]
        for c in range(col_i.shape[0]):
            i = col_i[c]
            j = col_j[c]
            if alpha & ~i or beta & ~j:
                out[r, c] = uint64(0)
            else:
                out[r, c] = mul(xpow[q, i - alpha], ypow[q, j - beta])
