"""Acceptance criteria, one test each, with pinned bounds and time limits."""

import time

import pytest

from spindec import cli
from spindec import tables as T
from spindec import verify as V

# wall-clock limits in seconds; criteria without a limit are bounded only by the suite size
TIME_LIMIT = {1: 1.0, 2: 1.0, 3: 5.0, 4: 5.0, 5: 5.0, 6: 1.0}
CFG = V.VerifyConfig()  # default bounds: 400, 4096, 100000, 3, 200, 100, 200, 40, 2**16


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def _suite(record, num, rep, secs):
    limit = TIME_LIMIT.get(num)
    fast = limit is None or secs < limit
    detail = f"{rep.suite}: {len(rep.failures)} violations over {rep.checked} instances, {secs:.2f}s"
    if limit is not None:
        detail += f" (limit {limit:g}s)"
    assert record(num, rep.ok and fast, detail), "\n".join(rep.lines()[:20])


def test_c01_compare_n12(acceptance, capsys):
    code, secs = timed(cli.main, ["compare", "--n", "12"])
    out = capsys.readouterr().out.strip()
    ok = code == 0 and out == "0 mismatches" and secs < TIME_LIMIT[1]
    assert acceptance(1, ok, f"n=12 {out}, {secs:.2f}s (limit 1s)"), out


def test_c02_compare_n16_n20(acceptance):
    verdicts, report = [], []
    for n in (16, 20):
        mismatches, secs = timed(lambda k: T.compare(T.build_table(k), T.bundled_reference(k)), n)
        verdicts.append(not mismatches and secs < TIME_LIMIT[2])
        report.append(f"n={n} {len(mismatches)} mismatches, {secs:.2f}s")
    t20 = T.build_table(20)
    cells = [str(t20.cells[a][[str(c) for c in t20.cols].index("double:2")]) for a in (5, 6, 7, 9)]
    verdicts.append(cells == ["<=2", "<=4", "<=2", "2"])
    report.append(f"n=20 D(10,8,2) rows 5,6,7,9 = {cells}")
    msg = "; ".join(report)
    if not verdicts[0]:
        msg += " [shipped n=16 row (10,6) disagrees with the formulas; see README]"
    assert acceptance(2, all(verdicts), msg), msg


def test_c03_case_identities(acceptance):
    _suite(acceptance, 3, *timed(V.suite_case_identities, CFG.case_max_n))


def test_c04_recurrence(acceptance):
    _suite(acceptance, 4, *timed(V.suite_recurrence, CFG.recurrence_max_k))


def test_c05_power_identity(acceptance):
    _suite(acceptance, 5, *timed(V.suite_power_identity, CFG.power_max_n))


def test_c06_expansions(acceptance):
    _suite(acceptance, 6, *timed(V.suite_expansions, CFG.expansion_count))


def test_c07_blocks(acceptance):
    _suite(acceptance, 7, *timed(V.suite_blocks, CFG.blocks_max_n))


def test_c08_shift(acceptance):
    _suite(acceptance, 8, *timed(V.suite_shift, CFG.shift_max_n))


def test_c09_diagonal(acceptance):
    _suite(acceptance, 9, *timed(V.suite_diagonal, CFG.diag_max_n))


def test_c10_regularize(acceptance):
    _suite(acceptance, 10, *timed(V.suite_regularize, CFG.regularize_max_size))


def test_c11_g_closed_form(acceptance):
    _suite(acceptance, 11, *timed(V.suite_g_closed_form, CFG.g_max_ell))


def test_c12_convention_audit(acceptance):
    rep, secs = timed(V.suite_convention_audit, CFG.blocks_max_n, CFG.expansion_count)
    detail = f"{rep.checked} instances, {secs:.2f}s; " + " | ".join(rep.notes)
    assert acceptance(12, rep.ok, detail), "\n".join(rep.lines())


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
