"""Compiled exhaustive check of the closed form of g against its definition."""

import numba
import numpy as np


@numba.njit(cache=True)
def g_closed(ell, m, bitlen):
    # mirrors dyadic.g; bitlen is a lookup table of int.bit_length
    if m < 0:
        return 0
    if m & ~ell:
        return 0
    return 1 if (1 << bitlen[m]) <= ell else 0


@numba.njit(cache=True)
def g_defn(ell, m):
    if m < 0:
        return 0
    # digits first: every binary digit of m is 0 or the digit of ell
    x, y = m, ell
    while x:
        if (x & 1) and not (y & 1):
            return 0
        x >>= 1
        y >>= 1
    k = 0
    while (1 << k) <= ell:
        if m < (1 << k):
            return 1
        k += 1
    return 0


@numba.njit(cache=True)
def _scan(max_ell, m_low, m_high_offset, bitlen):
    checked = 0
    bad = 0
    first_ell, first_m = -1, -1
    for ell in range(max_ell + 1):
        for m in range(m_low, ell + m_high_offset + 1):
            checked += 1
            if g_closed(ell, m, bitlen) != g_defn(ell, m):
                if bad == 0:
                    first_ell, first_m = ell, m
                bad += 1
    return checked, bad, first_ell, first_m


def bit_lengths(upto):
    return np.array([int(k).bit_length() for k in range(upto + 1)], dtype=np.int64)


def count_disagreements(max_ell, m_low=-4, m_high_offset=2):
    """All pairs 0 <= ell <= max_ell, m_low <= m <= ell + m_high_offset."""
    table = bit_lengths(max_ell + m_high_offset + 1)
    checked, bad, fe, fm = _scan(max_ell, m_low, m_high_offset, table)
    return checked, bad, (fe, fm)
