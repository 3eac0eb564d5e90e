"""Compiled loops over flat frequency tables.

A table over ``m`` variables is a flat float64 array of length ``2**m``; the
variable at position ``a`` owns bit ``m - 1 - a`` of the index. A selection
of the remaining ``m - 1`` variables is the index with that bit removed.
"""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _base_index(sel, bit):
    low = (1 << bit) - 1
    return ((sel >> bit) << (bit + 1)) | (sel & low)


@njit(cache=True)
def sorted_mi(w, m, axis):
    if m <= 1:
        return 0.0
    bit = m - 1 - axis
    s = 1 << bit
    half = 1 << (m - 1)
    lo_sum = 0.0
    hi_sum = 0.0
    total = 0.0
    nsel = 0
    for sel in range(half):
        i0 = _base_index(sel, bit)
        c0 = w[i0]
        c1 = w[i0 | s]
        c = c0 + c1
        if c > 0.0:
            nsel += 1
            total += c
            if c0 <= c1:
                lo_sum += c0
                hi_sum += c1
            else:
                lo_sum += c1
                hi_sum += c0
    if nsel == 0:
        return 0.0
    acc = 0.0
    for sel in range(half):
        i0 = _base_index(sel, bit)
        c0 = w[i0]
        c1 = w[i0 | s]
        c = c0 + c1
        if c > 0.0:
            lo = min(c0, c1)
            hi = max(c0, c1)
            if lo > 0.0:
                acc += lo * math.log(lo * total / (lo_sum * c))
            if hi > 0.0:
                acc += hi * math.log(hi * total / (hi_sum * c))
    mi = (half / nsel) * acc / total
    return mi if mi > 0.0 else 0.0


@njit(cache=True)
def all_scores(w, m):
    out = np.empty(m)
    for a in range(m):
        out[a] = sorted_mi(w, m, a)
    return out


@njit(cache=True)
def marginalize(w, m, axis):
    bit = m - 1 - axis
    s = 1 << bit
    half = 1 << (m - 1)
    out = np.empty(half, dtype=w.dtype)
    for sel in range(half):
        i0 = _base_index(sel, bit)
        out[sel] = w[i0] + w[i0 | s]
    return out


@njit(cache=True)
def truth_table(w, m, axis):
    """1 where x=1 is strictly more frequent, 0 otherwise, -1 for empty selections."""
    bit = m - 1 - axis
    s = 1 << bit
    half = 1 << (m - 1)
    out = np.empty(half, dtype=np.int8)
    for sel in range(half):
        i0 = _base_index(sel, bit)
        c0 = w[i0]
        c1 = w[i0 | s]
        if c0 + c1 <= 0.0:
            out[sel] = -1
        elif c1 > c0:
            out[sel] = 1
        else:
            out[sel] = 0
    return out
