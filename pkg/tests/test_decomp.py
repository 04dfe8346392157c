import pytest
from hypothesis import given
from hypothesis import strategies as st

from spindec import decomp as D
from spindec import partitions as P
from spindec.decomp import EntryValue as E


def test_entry_value():
    assert E.at_most(0) == E.exact(0)
    assert str(E.at_most(4)) == "<=4" and str(E.exact(2)) == "2" and str(E.unknown()) == "?"
    with pytest.raises(ValueError):
        E.exact(-1)
    with pytest.raises(ValueError):
        D.EntryValue(D.Tag.UNKNOWN, 3)


@pytest.mark.parametrize("n, a, b, want", [(12, 5, 5, 1), (12, 5, 3, 1), (12, 6, 5, 1)])
def test_james_specht(n, a, b, want):
    assert D.james_specht(n, a, b) == want


def test_james_specht_range():
    with pytest.raises(ValueError):
        D.james_specht(12, 7, 0)


@pytest.mark.parametrize("n, a, b, want", [(12, 5, 0, 8), (12, 4, 1, 8), (12, 4, 2, 0), (20, 9, 8, 2)])
def test_straight_entry(n, a, b, want):
    assert D.straight_entry(n, a, b) == want


def test_straight_entry_ranges():
    with pytest.raises(ValueError):
        D.straight_entry(12, 6, 0)
    with pytest.raises(ValueError):
        D.straight_entry(12, 0, 5)


def _support_oracle(n, b):
    # the seven listed cases, spelled out
    r, odd = n % 8, b % 2
    out = set()
    if n % 2 == 0:
        out.add(2)
    if r == 0 and not odd or r == 4 and odd:
        out.add(4)
    if r in (1, 3) and not odd or r in (5, 7) and odd:
        out.add(1)
    if r in (1, 3) and odd or r in (5, 7) and not odd:
        out.add(3)
    return out


@given(st.integers(4, 600), st.data())
def test_straight_entry_support(n, data):
    b = data.draw(st.integers(0, (n - 3) // 2))
    a = data.draw(st.integers(0, (n - 1) // 2))
    v = D.straight_entry(n, a, b)
    if n - 2 * a in _support_oracle(n, b):
        assert v == 2 ** D.d(n - 2 * b + 1) > 0
    else:
        assert v == 0


@pytest.mark.parametrize("n, a, b, want", [
    (12, 3, 1, E.exact(1)), (12, 2, 2, E.exact(2)), (20, 5, 2, E.at_most(2)),
    (20, 6, 2, E.at_most(4)), (20, 7, 2, E.at_most(2)), (20, 9, 2, E.exact(2)),
    (16, 7, 2, E.exact(0)), (16, 6, 2, E.exact(2)), (12, 0, 0, E.exact(1)), (12, 3, 0, E.unknown()),
])
def test_double_entry(n, a, b, want):
    assert D.double_entry(n, a, b) == want


def test_double_entry_rejects_bad_columns():
    with pytest.raises(ValueError):
        D.double_entry(12, 4, 4)  # dbl(8,4) = (5,3,3,1)
    with pytest.raises(ValueError):
        D.double_entry(12, 6, 1)


def test_bound_resolution_details():
    r = D.resolve_bound(20, 5, 2)
    assert (r.bound, r.residue_two, r.valuation, r.vanishing, r.c_equation) == (2, False, False, False, False)
    r = D.resolve_bound(20, 9, 2)
    assert r.c_equation and not r.valuation and not r.vanishing and r.exact
    r = D.resolve_bound(16, 6, 2)
    assert r.valuation and r.exact
    with pytest.raises(ValueError):
        D.resolve_bound(20, 5, 1)


def test_equality_condition():
    assert D.equality_condition(20, 2, 10) is True
    assert D.equality_condition(20, 2, 6) is False
    # condition (i) already certifies (16,6,2); (iii) agrees
    assert D.equality_condition(16, 2, 6) is True
    with pytest.raises(ValueError):
        D.equality_condition(20, 3, 6)
    with pytest.raises(ValueError):
        D.equality_condition(18, 2, 6)


def test_classify_columns():
    parts = [c.partition for c in D.classify_columns(12)]
    assert parts == [(12,), (11, 1), (10, 2), (9, 3), (8, 4), (7, 5), (6, 5, 1), (6, 4, 2), (5, 4, 2, 1)]
    cols16 = D.classify_columns(16)
    assert sum(c.kind == "straight" for c in cols16) == 7 and sum(c.kind == "double" for c in cols16) == 6
    cols20 = D.classify_columns(20)
    assert sum(c.kind == "straight" for c in cols20) == 9 and sum(c.kind == "double" for c in cols20) == 8
    assert cols20[-1].partition == (7, 6, 4, 3)
    with pytest.raises(ValueError):
        D.classify_columns(3)


@given(st.integers(4, 300))
def test_columns_distinct_and_sorted(n):
    parts = [c.partition for c in D.classify_columns(n)]
    assert len(set(parts)) == len(parts)
    assert parts == sorted(parts, reverse=True)
    assert all(P.is_strict(p) for p in parts)


@given(st.integers(8, 300), st.data())
def test_triangular_and_diagonal(n, data):
    bar = P.bounds(n)[2]
    b = data.draw(st.integers(1, max(bar, 1)))
    if not D.double_column_ok(n, b):
        return
    a = data.draw(st.integers(0, b - 1))
    assert D.double_entry(n, a, b) == E.exact(0)
    assert D.double_entry(n, b, b) == E.exact(2 ** (P.h2((n - b, b)) // 2))


@given(st.integers(8, 300), st.data())
def test_shift(n, data):
    small, bar = P.bounds(n)[1:]
    b = data.draw(st.integers(1, max(bar, 1)))
    a = data.draw(st.integers(1, small))
    if not (D.double_column_ok(n, b) and D.double_column_ok(n + 4, b + 2)):
        return
    u, v = D.double_entry(n, a, b), D.double_entry(n + 4, a + 2, b + 2)
    if u.is_exact and v.is_exact:
        assert u.value == v.value


@given(st.integers(4, 300), st.data())
def test_unknown_and_bounds_only_where_expected(n, data):
    a = data.draw(st.integers(0, P.bounds(n)[1]))
    for col in D.classify_columns(n):
        v = D.entry(n, a, col)
        if v.tag is D.Tag.UNKNOWN:
            assert col.kind == "double" and col.b == 0 and a >= 1
        if v.tag is D.Tag.AT_MOST:
            assert col.kind == "double" and n % 4 == 0 and col.b % 2 == 0 and col.b >= 2
