import pytest
from hypothesis import given
from hypothesis import strategies as st

from spindec import tables as T
from spindec.decomp import EntryValue as E

N12_TEXT = """\
            | D(12) D(11,1) D(10,2) D(9,3) D(8,4) D(7,5) D(6,5,1) D(6,4,2) D(5,4,2,1)
-------------------------------------------------------------------------------------
S((12),±)   |                                          1
S((11,1),0) |                                          ?        1
S((10,2),0) |                                          ?        2        2
S((9,3),0)  |                                          ?        1        2          1
S((8,4),0)  |             8              4             ?                            2
S((7,5),0)  |     8       8       4      4      2      ?                 2          1
"""


def _csv_cells(n):
    header, cells = T.parse_csv(T.render(T.build_table(n), "csv"))
    return cells


@pytest.mark.parametrize("n, shape", [(12, (6, 9)), (16, (8, 13)), (20, (10, 17))])
def test_table_shapes(n, shape):
    t = T.build_table(n)
    assert (len(t.rows), len(t.cols)) == shape


def test_text_render_frozen():
    assert T.render(T.build_table(12), "text") == N12_TEXT


def test_csv_cells():
    assert _csv_cells(12)[("9,3", "5,4,2,1")] == "1"
    assert _csv_cells(20)[("14,6", "10,8,2")] == "<=4"
    assert _csv_cells(12)[("10,2", "7,5")] == "?"
    assert _csv_cells(12)[("10,2", "12")] == ""


def test_latex_render():
    out = T.render(T.build_table(20), "latex")
    assert out.startswith("\\begin{tabular}") and out.rstrip().endswith("\\end{tabular}")
    assert "$\\leq4$" in out and "$S((12),\\pm)$" not in out
    assert "$S((20),0)$" in out or "$S((20),\\pm)$" in out


def test_render_rejects_format():
    with pytest.raises(ValueError):
        T.render(T.build_table(12), "html")


def test_build_table_needs_n4():
    with pytest.raises(ValueError):
        T.build_table(3)


def test_row_labels():
    assert str(T.row_label(12, 0)) == "S((12),±)"
    assert str(T.row_label(12, 3)) == "S((9,3),0)"
    assert str(T.row_label(13, 3)) == "S((10,3),±)"


@given(st.integers(4, 60))
def test_csv_round_trip(n):
    t = T.build_table(n)
    header, cells = T.parse_csv(T.render(t, "csv"))
    for r, row in zip(t.rows, t.cells):
        for col, v in zip(t.cols, row):
            key = (",".join(map(str, r.lam)), ",".join(map(str, col.partition)))
            assert cells[key] == T.cell_text(v)


@given(st.integers(4, 60))
def test_table_matches_its_own_csv(n):
    t = T.build_table(n)
    ref = T.parse_reference(T.render(t, "csv"))
    assert T.compare(t, ref) == []


@pytest.mark.parametrize("raw, kind, value", [
    ("", "value", 0), ("3", "value", 3), ("1=?", "known", 1), ("≤2", "bound", 2), ("<=4", "bound", 4), ("?", "unknown", None),
])
def test_parse_ref_cell(raw, kind, value):
    cell = T.parse_ref_cell(raw)
    assert (cell.kind, cell.value) == (kind, value)


def test_cell_matching_rules():
    known = T.parse_ref_cell("1=?")
    assert T.cell_matches(E.exact(1), known) and T.cell_matches(E.unknown(), known)
    assert not T.cell_matches(E.exact(2), known)
    assert T.cell_matches(E.at_most(2), T.parse_ref_cell("≤2"))
    assert not T.cell_matches(E.exact(2), T.parse_ref_cell("≤2"))
    assert not T.cell_matches(E.unknown(), T.parse_ref_cell("2"))
    assert T.cell_matches(E.exact(0), T.parse_ref_cell(""))


def test_bundled_references():
    for n in (12, 20):
        assert T.compare(T.build_table(n), T.bundled_reference(n)) == []
    with pytest.raises(FileNotFoundError):
        T.bundled_reference(13)


def test_known_marker_row():
    ref = T.bundled_reference(12)
    assert ref.cells[((12,), (7, 5))].kind == "known"


def test_n16_differences_are_one_row():
    # the shipped n=16 table disagrees with the formulas in exactly one row,
    # where its nonzero pattern is shifted by one column
    out = T.compare(T.build_table(16), T.bundled_reference(16))
    assert {m.row for m in out} == {(10, 6)}
    got = {(m.column, m.tool, m.reference) for m in out}
    assert got == {
        ((16,), "8", "(blank)"), ((15, 1), "0", "16"), ((14, 2), "8", "(blank)"),
        ((13, 3), "0", "8"), ((12, 4), "4", "(blank)"), ((11, 5), "0", "4"), ((10, 6), "2", "(blank)"),
    }


def test_corrupted_reference_gives_one_mismatch():
    ref = T.parse_reference(T.render(T.build_table(12), "csv"))
    ref.cells[((9, 3), (9, 3))] = T.parse_ref_cell("7")
    out = T.compare(T.build_table(12), ref)
    assert len(out) == 1 and out[0].row == (9, 3) and out[0].column == (9, 3)


@pytest.mark.parametrize("text, line, column", [
    ("", 0, 1),
    ("col,12\n", 1, 1),
    ('row,12,"11,1"\n12,1\n', 2, 3),
    ('row,12,"11,1"\n12,x,\n', 2, 2),
    ('# note\nrow,12,"11,1"\n12,,\n"11,2",,\n', 4, 1),
    ("row,12,x\n", 1, 3),
])
def test_reference_errors_have_positions(text, line, column):
    with pytest.raises(T.ReferenceFormatError) as err:
        T.parse_reference(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_compare_rejects_other_n():
    with pytest.raises(ValueError):
        T.compare(T.build_table(12), T.bundled_reference(20))


@pytest.mark.parametrize("n", [12, 16, 20])
def test_column_order_matches_references(n):
    assert [c.partition for c in T.build_table(n).cols] == T.bundled_reference(n).columns
