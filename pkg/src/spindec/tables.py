"""Partial decomposition matrices for two-part spin characters: assembly,
rendering (text / csv / latex) and comparison with reference tables."""

import csv
import io
from dataclasses import dataclass
from importlib import resources
from typing import NamedTuple

from . import partitions as P
from .decomp import EntryValue, Tag, classify_columns, entry

FORMATS = ("text", "csv", "latex")


class RowLabel(NamedTuple):
    a: int
    lam: tuple
    eps_kind: str  # "0" or "±"

    def __str__(self):
        return f"S(({P.format_partition(self.lam)}),{self.eps_kind})"


@dataclass
class DecompTable:
    n: int
    rows: list
    cols: list
    cells: list  # cells[r][c] is an EntryValue

    def cell(self, a, col):
        return self.cells[a][self.cols.index(col)]


def row_label(n, a):
    lam = P.as_partition((n - a, a))
    return RowLabel(a, lam, "0" if (n - len(lam)) % 2 == 0 else "±")


def build_table(n) -> DecompTable:
    if n < 4:
        raise ValueError(f"tables need n >= 4, got {n}")
    small = P.bounds(n)[1]
    rows = [row_label(n, a) for a in range(small + 1)]
    cols = classify_columns(n)
    cells = [[entry(n, r.a, col) for col in cols] for r in rows]
    return DecompTable(n, rows, cols, cells)


def cell_text(v: EntryValue) -> str:
    """CSV/text vocabulary: '' for zero, 'v', '<=v' or '?'."""
    if v.tag is Tag.EXACT and v.value == 0:
        return ""
    return str(v)


def render(table: DecompTable, fmt="text") -> str:
    if fmt == "text":
        return _render_text(table)
    if fmt == "csv":
        return _render_csv(table)
    if fmt == "latex":
        return _render_latex(table)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _render_text(table):
    head = [""] + [f"D({P.format_partition(c.partition)})" for c in table.cols]
    body = [[str(r)] + [cell_text(v) for v in row] for r, row in zip(table.rows, table.cells)]
    widths = [max(len(line[k]) for line in [head] + body) for k in range(len(head))]
    lines = []
    for k, line in enumerate([head] + body):
        first = line[0].ljust(widths[0])
        rest = " ".join(s.rjust(w) for s, w in zip(line[1:], widths[1:]))
        lines.append(f"{first} | {rest}".rstrip())
        if k == 0:
            lines.append("-" * len(lines[0]))
    return "\n".join(lines) + "\n"


def _render_csv(table):
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["row"] + [P.format_partition(c.partition) for c in table.cols])
    for r, row in zip(table.rows, table.cells):
        w.writerow([P.format_partition(r.lam)] + [cell_text(v) for v in row])
    return out.getvalue()


def _latex_cell(v):
    if v.tag is Tag.AT_MOST:
        return f"$\\leq{v.value}$"
    return cell_text(v)


def _render_latex(table):
    colspec = "l|" + "c" * len(table.cols)
    lines = [f"\\begin{{tabular}}{{{colspec}}}"]
    head = " & ".join(f"$D^{{({P.format_partition(c.partition)})}}$" for c in table.cols)
    lines.append(f" & {head}\\\\ \\hline")
    for r, row in zip(table.rows, table.cells):
        eps = "\\pm" if r.eps_kind == "±" else "0"
        label = f"$S(({P.format_partition(r.lam)}),{eps})$"
        lines.append(label + " & " + " & ".join(_latex_cell(v) for v in row) + "\\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def parse_csv(text):
    """Read a rendered CSV table back into {(row, column): cell string}."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    out = {}
    for rec in reader:
        for col, value in zip(header[1:], rec[1:]):
            out[(rec[0], col)] = value
    return header[1:], out


# reference tables -----------------------------------------------------------

class ReferenceFormatError(ValueError):
    def __init__(self, line, column, reason):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {reason}")


class RefCell(NamedTuple):
    """One reference cell; ``kind`` is value, known, bound or unknown."""
    kind: str
    value: int = None
    raw: str = ""


def parse_ref_cell(raw) -> RefCell:
    s = raw.strip()
    if s == "":
        return RefCell("value", 0, raw)
    if s == "?":
        return RefCell("unknown", None, raw)
    if s.endswith("=?") and s[:-2].isdigit():
        return RefCell("known", int(s[:-2]), raw)
    for prefix in ("≤", "<="):
        if s.startswith(prefix) and s[len(prefix):].isdigit():
            return RefCell("bound", int(s[len(prefix):]), raw)
    if s.isdigit():
        return RefCell("value", int(s), raw)
    raise ValueError(f"unrecognised reference cell {raw!r}")


@dataclass
class Reference:
    n: int
    columns: list  # partitions
    rows: list  # partitions
    cells: dict  # (row partition, column partition) -> RefCell


def parse_reference(text) -> Reference:
    """Parse a reference CSV ('#' lines are comments)."""
    lines = text.splitlines()
    data = [(k + 1, line) for k, line in enumerate(lines) if line.strip() and not line.lstrip().startswith("#")]
    if not data:
        raise ReferenceFormatError(len(lines), 1, "no header row")
    records = []
    for lineno, line in data:
        rec = next(csv.reader([line]))
        records.append((lineno, rec))
    head_line, header = records[0]
    if not header or header[0] != "row":
        raise ReferenceFormatError(head_line, 1, "first header cell must be 'row'")
    columns = []
    for k, label in enumerate(header[1:], start=2):
        try:
            columns.append(P.parse_partition(label))
        except ValueError as exc:
            raise ReferenceFormatError(head_line, k, str(exc)) from None
    if not columns:
        raise ReferenceFormatError(head_line, 2, "no columns")
    n = sum(columns[0])
    if any(sum(c) != n for c in columns):
        raise ReferenceFormatError(head_line, 2, "column partitions have different sizes")
    rows, cells = [], {}
    for lineno, rec in records[1:]:
        if len(rec) != len(header):
            raise ReferenceFormatError(lineno, min(len(rec), len(header)) + 1,
                                       f"expected {len(header)} fields, found {len(rec)}")
        try:
            lam = P.parse_partition(rec[0])
        except ValueError as exc:
            raise ReferenceFormatError(lineno, 1, str(exc)) from None
        if sum(lam) != n:
            raise ReferenceFormatError(lineno, 1, f"row {rec[0]} is not a partition of {n}")
        rows.append(lam)
        for k, (col, raw) in enumerate(zip(columns, rec[1:]), start=2):
            try:
                cells[(lam, col)] = parse_ref_cell(raw)
            except ValueError as exc:
                raise ReferenceFormatError(lineno, k, str(exc)) from None
    return Reference(n, columns, rows, cells)


def bundled_reference(n) -> Reference:
    """Reference tables shipped with the package (n = 12, 16, 20)."""
    name = f"appendix_n{n}.csv"
    res = resources.files("spindec") / "data" / name
    if not res.is_file():
        raise FileNotFoundError(f"no bundled reference table for n={n}")
    return parse_reference(res.read_text(encoding="utf-8"))


def cell_matches(tool: EntryValue, ref: RefCell) -> bool:
    if tool.tag is Tag.EXACT:
        return ref.kind in ("value", "known") and ref.value == tool.value
    if tool.tag is Tag.AT_MOST:
        return ref.kind == "bound" and ref.value == tool.value
    return ref.kind in ("unknown", "known")


class Mismatch(NamedTuple):
    row: tuple
    column: tuple
    tool: str
    reference: str

    def __str__(self):
        return (f"row {P.format_partition(self.row)} col {P.format_partition(self.column)}: "
                f"tool {self.tool!r} vs reference {self.reference!r}")


def compare(table: DecompTable, ref: Reference) -> list:
    """Cell-by-cell verdicts; returns the mismatches (empty list = agreement)."""
    if ref.n != table.n:
        raise ValueError(f"reference is for n={ref.n}, table for n={table.n}")
    out = []
    tool_cols = [c.partition for c in table.cols]
    tool_rows = [r.lam for r in table.rows]
    for col in ref.columns:
        if col not in tool_cols:
            out.append(Mismatch((), col, "missing column", "column present"))
    for col in tool_cols:
        if col not in ref.columns:
            out.append(Mismatch((), col, "column present", "missing column"))
    for lam in ref.rows:
        if lam not in tool_rows:
            out.append(Mismatch(lam, (), "missing row", "row present"))
    for lam in tool_rows:
        if lam not in ref.rows:
            out.append(Mismatch(lam, (), "row present", "missing row"))
    for r, row in zip(table.rows, table.cells):
        for col, v in zip(tool_cols, row):
            ref_cell = ref.cells.get((r.lam, col))
            if ref_cell is None:
                continue
            if not cell_matches(v, ref_cell):
                out.append(Mismatch(r.lam, col, str(v), ref_cell.raw.strip() or "(blank)"))
    return out
