import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spindec._gcheck import bit_lengths, g_closed, g_defn
from spindec.dyadic import d, g, g_array, g_by_definition, nu2


@pytest.mark.parametrize("m, want", [(1, 0), (4, 2), (12, 2), (7, 0), (96, 5)])
def test_nu2(m, want):
    assert nu2(m) == want


@pytest.mark.parametrize("m", [0, -3])
def test_nu2_rejects_nonpositive(m):
    with pytest.raises(ValueError):
        nu2(m)


@pytest.mark.parametrize("ell, m, want", [
    (10, 2, 1), (8, 1, 0), (5, -2, 0), (1, 0, 1), (0, 0, 0), (7, 2, 1),
    (3, 1, 1), (13, 4, 1), (13, 5, 1), (13, 9, 0), (12, 4, 1), (4, 4, 0),
])
def test_g_values(ell, m, want):
    assert g(ell, m) == want
    assert g_by_definition(ell, m) == want


def test_g_rejects_negative_ell():
    with pytest.raises(ValueError):
        g(-1, 0)


def test_g_small_range_against_definition():
    # scalar, vectorised and compiled closed forms all agree with the literal reading
    table = bit_lengths(1100)
    for ell in range(1025):
        ms = np.arange(-4, ell + 3)
        row = g_array(ell, ms)
        for m, v in zip(ms.tolist(), row.tolist()):
            ref = g_by_definition(ell, m)
            assert g(ell, m) == ref == v == g_closed(ell, m, table) == g_defn(ell, m), (ell, m)


@given(st.integers(0, 2**40), st.integers(-10, 2**40))
def test_g_closed_form_matches_definition(ell, m):
    assert g(ell, m) == g_by_definition(ell, m)


@given(st.integers(1, 2**30), st.integers(1, 2**30))
def test_g_positive_implies_below(ell, m):
    if g(ell, m):
        assert 0 <= m < ell


@given(st.integers(0, 2**30))
def test_g_edges(ell):
    assert g(ell, 0) == int(ell >= 1)
    if ell > 0:
        assert g(ell, ell) == 0
    assert g(2 * ell + 2, ell + 1) == 0  # (2m, m)


@pytest.mark.parametrize("m, want", [(13, 3), (5, 1), (21, 4), (1, -2), (3, 0), (16, 2)])
def test_d_values(m, want):
    assert d(m) == want


def _d_oracle(m):
    bits = bin(m)[2:]
    return (len(bits) - 1) + bits.count("1") - 3


@given(st.integers(1, 2**50))
def test_d_matches_digit_oracle(m):
    assert d(m) == _d_oracle(m)
    assert d(2 * m) == d(m) + 1


@given(st.integers(0, 60))
def test_d_powers_of_two(a):
    assert d(2**a) == a - 2


def test_d_rejects_zero():
    with pytest.raises(ValueError):
        d(0)
