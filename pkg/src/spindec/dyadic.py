"""Bit-level 2-adic helpers: the valuation nu2, base-2 containment g, and d."""

import numpy as np


def nu2(m: int) -> int:
    """Exponent of the largest power of 2 dividing ``m`` (``m >= 1``)."""
    if m <= 0:
        raise ValueError(f"nu2 needs a positive integer, got {m}")
    return (m & -m).bit_length() - 1


def g(ell: int, m: int) -> int:
    """1 if ``ell`` contains ``m`` to base 2, else 0.

    Containment means some ``k`` has ``0 <= m < 2**k <= ell`` and every
    binary digit of ``m`` is either 0 or the matching digit of ``ell``.
    The smallest admissible ``k`` is ``m.bit_length()``, so the quantifier
    reduces to ``2**bitlen(m) <= ell``. Negative ``m`` and ``ell == 0`` give 0.
    """
    if ell < 0:
        raise ValueError(f"g needs ell >= 0, got {ell}")
    if m < 0:
        return 0
    if m & ~ell:
        return 0
    return int((1 << m.bit_length()) <= ell)


def g_array(ell, m):
    """Vectorised :func:`g` over broadcastable integer arrays."""
    ell = np.asarray(ell, dtype=np.int64)
    m = np.asarray(m, dtype=np.int64)
    if np.any(ell < 0):
        raise ValueError("g needs ell >= 0")
    mm = np.where(m < 0, 0, m)
    # bit length via frexp is exact for |m| < 2**53
    _, exp = np.frexp(mm.astype(np.float64))
    bitlen = np.where(mm == 0, 0, exp).astype(np.int64)
    ok = (m >= 0) & ((mm & ~ell) == 0) & ((np.int64(1) << bitlen) <= ell)
    return ok.astype(np.int64)


def d(m: int) -> int:
    """``a_1 + k - 3`` where ``m = 2**a_1 + ... + 2**a_k`` with ``a_1`` maximal.

    Negative for ``m <= 3``; only ``m >= 1`` is accepted.
    """
    if m < 1:
        raise ValueError(f"d needs m >= 1, got {m}")
    return (m.bit_length() - 1) + bin(m).count("1") - 3


def g_by_definition(ell: int, m: int) -> int:
    """Literal reading of containment: search for ``k``, compare digits one by one.

    Slow reference used by the tests and the verification suites.
    """
    if m < 0:
        return 0
    k = 0
    witness = False
    while (1 << k) <= ell:
        if m < (1 << k):
            witness = True
            break
        k += 1
    if not witness:
        return 0
    i = 0
    while (m >> i) or (ell >> i):
        bi = (m >> i) & 1
        ai = (ell >> i) & 1
        if bi not in (0, ai):
            return 0
        i += 1
    return 1
