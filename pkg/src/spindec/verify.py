"""Exhaustive checks of the identities behind the decomposition formulas.

Every suite returns a :class:`SuiteReport`; a report passes iff it has no
failures. Counterexamples found outside a suite's hypotheses are kept as
informational notes, never as failures.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import decomp as D
from . import grothendieck as G
from . import partitions as P
from .dyadic import d, g, g_array


@dataclass(frozen=True)
class VerifyConfig:
    case_max_n: int = 400
    recurrence_max_k: int = 4096
    power_max_n: int = 100_000
    expansion_count: int = 3
    blocks_max_n: int = 200
    shift_max_n: int = 100
    diag_max_n: int = 200
    remark_max_n: int = 200
    regularize_max_size: int = 40
    g_max_ell: int = 2**16
    bound_max_n: int = 200
    support_max_n: int = 400


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def fail(self, instance):
        self.failures.append(str(instance))

    def lines(self):
        out = [f"FAIL {self.suite} {f}" for f in self.failures]
        out += [f"INFO {self.suite} {note}" for note in self.notes]
        out.append(f"{'OK' if self.ok else 'FAILED'} {self.suite} {self.checked}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


# g identities from the double-column proofs ---------------------------------

def _grid(n):
    _, small, bar = P.bounds(n)
    a = np.arange(small + 1)[:, None]
    b = np.arange(1, bar + 1)[None, :]
    return np.broadcast_arrays(a, b)


def _g(ell, m):
    # the identities only ever see ell >= 0 inside their ranges; clamp defensively
    return g_array(np.maximum(ell, 0), m) * (np.asarray(ell) >= 0)


def _case_sides(case, n, a, b):
    """(derived piecewise value, closed-formula value) for the six double-column cases."""
    even = a % 2 == 0
    k = n - 2 * b
    if case == 1:
        derived = np.where(even, 2 * _g(k - 2, a - b - 1), _g(k - 2, a - b) + _g(k - 2, a - b - 2))
        claim = _g(k, a - b) + 2 * _g(k - 2, a - b - 1)
    elif case == 2:
        derived = np.where(even, _g(k - 1, a - b), _g(k - 1, a - b - 1))
        claim = _g(k, a - b)
    elif case == 3:
        derived = np.where(even, _g(k - 3, a - b - 3), _g(k - 3, a - b))
        claim = _g(k, a - b) - _g(k - 2, a - b - 1)
    elif case == 4:
        derived = np.where(even, 2 * _g(k - 2, a - b) + 2 * _g(k - 2, a - b - 2), 0)
        claim = 2 * _g(k, a - b)
    elif case == 5:
        derived = np.where(even, _g(k - 3, a - b), _g(k - 3, a - b - 3))
        claim = _g(k, a - b) - _g(k - 2, a - b - 1)
    elif case == 6:
        derived = np.where(even, _g(k - 1, a - b - 1), _g(k - 1, a - b))
        claim = _g(k, a - b)
    else:
        raise ValueError(case)
    return derived, claim


_CASE_OF = {(0, 1): 1, (1, 0): 2, (1, 1): 3, (2, 0): 4, (3, 0): 5, (3, 1): 6}


def suite_case_identities(max_n=400) -> SuiteReport:
    """Per-case g-identities equating the derived entries with the closed formulas.

    Covers the six parity cases of the double-column formulas, the telescoping
    sum for n = 2 mod 4 with b odd, and the rewriting of the upper bound for
    n = 0 mod 4 with b even.
    """
    rep = SuiteReport("case-identities")
    for n in range(8, max_n + 1):
        a, b = _grid(n)
        if b.size == 0:
            continue
        ok_col = np.array([D.double_column_ok(n, int(bb)) for bb in b[0]])[None, :]
        for (r, parity), case in _CASE_OF.items():
            if n % 4 != r:
                continue
            mask = (b % 2 == parity) & ok_col
            derived, claim = _case_sides(case, n, a, b)
            bad = mask & (derived != claim)
            rep.checked += int(mask.sum())
            for aa, bb in zip(a[bad], b[bad]):
                rep.fail(f"case{case} n={n} a={aa} b={bb}")
        if n % 4 == 0:
            mask = (b % 2 == 0) & ok_col & (b >= 2)
            k = n - 2 * b
            lhs = 2 * _g(k - 3, a - b) + 2 * _g(k - 3, a - b - 3)
            rhs = np.where(a % 2 == 0,
                           2 * _g(k - 4, a - b) + 2 * _g(k - 4, a - b - 4),
                           2 * _g(k - 4, a - b - 1) + 2 * _g(k - 4, a - b - 3))
            bad = mask & (lhs != rhs)
            rep.checked += int(mask.sum())
            for aa, bb in zip(a[bad], b[bad]):
                rep.fail(f"bound-rewrite n={n} a={aa} b={bb}")
        if n % 4 == 2:
            # sum_{c=z}^{(a-1)/2} (g(n-4z-1, 2c-2z) - g(n-4z-1, 2c-2z-1)) = g(n-4z-2, a-2z-1)
            for aa in range(1, n // 2 - 1, 2):
                for z in range((aa - 1) // 2 + 1):
                    total = sum(g(n - 4 * z - 1, 2 * c - 2 * z) - g(n - 4 * z - 1, 2 * c - 2 * z - 1)
                                for c in range(z, (aa - 1) // 2 + 1))
                    rep.checked += 1
                    if total != g(n - 4 * z - 2, aa - 2 * z - 1):
                        rep.fail(f"telescope n={n} a={aa} z={z}")
    return rep


def _lowbit(x):
    return x & -x


def suite_recurrence(max_k=4096) -> SuiteReport:
    """g(k, l) = g(k-1, l) + g(k-1, l-1) when nu2(l) >= nu2(k) or g(k-1, l-1) = 0."""
    rep = SuiteReport("recurrence")
    outside = 0
    first_outside = None
    for k in range(2, max_k + 1):
        rep.checked += 1
        if g(k, 0) != g(k - 1, 0) + g(k - 1, -1):
            rep.fail(f"k={k} l=0")
    for k in range(2, max_k + 1):
        ell = np.arange(1, k, dtype=np.int64)
        lhs = g_array(k, ell)
        tail = g_array(k - 1, ell - 1)
        rhs = g_array(k - 1, ell) + tail
        hyp = (_lowbit(ell) >= (k & -k)) | (tail == 0)
        rep.checked += int(hyp.sum())
        bad = hyp & (lhs != rhs)
        for l in ell[bad]:
            rep.fail(f"k={k} l={l}")
        off = ~hyp & (lhs != rhs)
        if off.any():
            outside += int(off.sum())
            if first_outside is None:
                first_outside = (k, int(ell[off][0]))
    if outside:
        rep.notes.append(f"expected-outside-hypothesis {outside} pairs, first k={first_outside[0]} l={first_outside[1]}")
    return rep


def power_identity_sides(n):
    """Both sides of 2^{d_{n-1}+1} - sum_{i=1}^{k-1} 2^{d_{n-2^{i+1}+1}+1} = 2^{d_{n+1}}."""
    k = ((n + 1) & -(n + 1)).bit_length() - 1
    if (n + 1) >> k == 1:
        k -= 1  # n + 1 is a power of two: take h = 2
    lhs = 2 ** (d(n - 1) + 1) - sum(2 ** (d(n - 2 ** (i + 1) + 1) + 1) for i in range(1, k))
    return lhs, 2 ** d(n + 1)


def suite_power_identity(max_n=100_000) -> SuiteReport:
    rep = SuiteReport("power")
    for n in range(5, max_n + 1, 2):
        lhs, rhs = power_identity_sides(n)
        rep.checked += 1
        if lhs != rhs:
            rep.fail(f"n={n} lhs={lhs} rhs={rhs}")
    return rep


# Grothendieck-group expansions -----------------------------------------------

def _spin_sum(pairs):
    """Sum of coeff * Spin(lam), dropping non-strict or improper partitions."""
    terms = {}
    for coeff, parts in pairs:
        parts = tuple(parts)
        if any(x < 0 for x in parts):
            continue
        parts = tuple(x for x in parts if x > 0)
        if list(parts) != sorted(parts, reverse=True) or not P.is_strict(parts):
            continue
        key = G.Basis(G.SPIN, parts)
        terms[key] = terms.get(key, 0) + coeff
    return G.FormalSum(terms)


def _sym_sum(pairs):
    terms = {}
    for coeff, parts in pairs:
        parts = tuple(x for x in parts if x > 0)
        if list(parts) != sorted(parts, reverse=True):
            continue
        key = G.Basis(G.SYM, parts)
        terms[key] = terms.get(key, 0) + coeff
    return G.FormalSum(terms)


# Odd n, b > 0: f_i^2 S((n-c-2, c)) for each (n mod 8, b parity) class.
# Each entry: (label "odd-<n mod 8>-<b parity>", n mod 8, b parity, i, stated c, right side).
ODD_CASES = [
    ("odd-1-even", 1, 0, 0, lambda n: (n - 3) // 2,
     lambda n: [(2, ((n + 1) // 2, (n - 1) // 2)), (4, ((n + 1) // 2, (n - 3) // 2, 1))]),
    ("odd-3-even", 3, 0, 0, lambda n: (n - 5) // 2,
     lambda n: [(2, ((n + 1) // 2, (n - 1) // 2)), (4, ((n + 1) // 2, (n - 3) // 2, 1))]),
    ("odd-3-odd", 3, 1, 1, lambda n: (n - 3) // 2,
     lambda n: [(2, ((n + 3) // 2, (n - 3) // 2))]),
    ("odd-5-odd", 5, 1, 1, lambda n: (n - 3) // 2,
     lambda n: [(2, ((n + 1) // 2, (n - 1) // 2))]),
    ("odd-7-even", 7, 0, 0, lambda n: (n - 3) // 2,
     lambda n: [(2, ((n + 3) // 2, (n - 3) // 2)), (4, ((n + 1) // 2, (n - 3) // 2, 1))]),
    ("odd-7-odd", 7, 1, 1, lambda n: (n - 5) // 2,
     lambda n: [(2, ((n + 1) // 2, (n - 1) // 2))]),
    ("odd-1-odd", 1, 1, 1, lambda n: (n - 1) // 2,
     lambda n: [(4, ((n + 3) // 2, (n - 3) // 2)), (2, ((n + 5) // 2, (n - 5) // 2))]),
    ("odd-5-even", 5, 0, 0, lambda n: (n - 5) // 2,
     lambda n: [(4, ((n + 3) // 2, (n - 3) // 2)), (2, ((n + 5) // 2, (n - 5) // 2)),
                (4, ((n + 1) // 2, (n - 3) // 2, 1)), (4, ((n + 3) // 2, (n - 5) // 2, 1))]),
]


def _straight_row(n, b):
    """Rows a with a nonzero straight entry in column b (the c of a projective cover)."""
    small = P.bounds(n)[1]
    return [a for a in range(small + 1) if D.straight_entry(n, a, b)]


def _admissible(residue, start, count, step=8):
    n = start
    while n % step != residue:
        n += 1
    return [n + step * t for t in range(count)]


def _check(rep, label, got, want):
    rep.checked += 1
    if got != want:
        rep.fail(f"{label}: got {got} want {want}")


def expansions_odd(rep, count, convention):
    for label, r8, parity, i, stated_c, rhs in ODD_CASES:
        for n in _admissible(r8, 15, count):
            for b in range(1, (n - 3) // 2 + 1):
                if b % 2 != parity:
                    continue
                # i is the residue of the top two addable nodes of (n-b-1, b-1)
                lam = P.as_partition((n - b - 1, b - 1))
                top = {A for A in P.addable(lam) if A[0] <= 2}
                if {P.residue(A) for A in top} != {i}:
                    rep.fail(f"{label} n={n} b={b}: residue of top addable nodes is not {i}")
                rows = _straight_row(n - 2, b - 1)
                if len(rows) != 1:
                    rep.fail(f"{label} n={n} b={b}: expected one spin row for column {b - 1}, got {rows}")
                    continue
                c = rows[0]
                if c != stated_c(n) and b == parity + (0 if parity else 2):
                    rep.notes.append(f"{label} n={n}: stated c={stated_c(n)} differs from c={c} forced by the straight column")
                got = G.apply_ops(G.FormalSum.spin((n - c - 2, c)), [f"f{i}", f"f{i}"], convention)
                _check(rep, f"{label} n={n} b={b}", got, _spin_sum(rhs(n)))


def expansions_b0(rep, count, convention):
    for r8 in (1, 3, 5, 7):
        for n in _admissible(r8, 15, count):
            c = (n - 3) // 2 if r8 in (3, 5) else (n - 5) // 2
            c2 = (n - 1) // 2 if r8 in (1, 3) else (n - 3) // 2
            rows = _straight_row(n - 2, 0)
            if rows != [c]:
                rep.fail(f"b0 n={n}: spin row of column 0 over n-2 is {rows}, expected [{c}]")
            got = G.truncate_rows(G.apply_ops(G.FormalSum.spin((n - c - 2, c)), ["f1", "f0"], convention), 2)
            _check(rep, f"b0 n={n}", got, _spin_sum([(2, (n - c2, c2))]))
            for a in range(0, (n - 3) // 2 + 1, 2):
                got = G.truncate_rows(G.apply_ops(G.FormalSum.sym((n - a - 2, a)), ["f1", "f0"]), 2)
                want = [(1, (n - a, a))] + ([(1, (n - a - 2, a + 2))] if a < (n - 3) // 2 else [])
                _check(rep, f"b0-sym n={n} a={a}", got, _sym_sum(want))
    for n in _admissible(1, 15, count):
        # f_1 f_0 on the spin part of the cover of (n-b-2, b) for b odd, n = 1 mod 8
        src = ((n - 1) // 2, (n - 3) // 2)
        got = G.truncate_rows(G.apply_ops(G.FormalSum.spin(src), ["f0", "f1"], convention), 2)
        _check(rep, f"odd-1-odd-cover n={n}", got, _spin_sum([(2, ((n + 3) // 2, (n - 3) // 2))]))


def expansions_even(rep, count, convention):
    for r8 in (0, 2, 4, 6):
        for n in _admissible(r8, 16, count):
            for b in range(0, (n - 4) // 2 + 1):
                lam = P.as_partition((n - b - 1, b))
                top = {A for A in P.addable(lam) if A[0] <= 2}
                res = {P.residue(A) for A in top}
                if len(res) != 1:
                    rep.fail(f"even n={n} b={b}: top addable nodes have residues {res}")
                    continue
                i = res.pop()
                rows = _straight_row(n - 1, b)
                if len(rows) != 1 or rows[0] not in (n // 2 - 1, n // 2 - 2):
                    rep.fail(f"even n={n} b={b}: spin rows {rows}")
                    continue
                c = rows[0]
                want = [(2, (n // 2 + 1, n // 2 - 1))]
                if (n % 8 == 0 and b % 2 == 0) or (n % 8 == 4 and b % 2 == 1):
                    want.append((2, (n // 2 + 2, n // 2 - 2)))
                got = G.truncate_rows(G.apply_f(G.FormalSum.spin((n - c - 1, c)), i, convention), 2)
                _check(rep, f"even n={n} b={b}", got, _spin_sum(want))


def _bar_i(b):
    return 0 if b % 4 in (0, 3) else 1


# double-column cases: (n mod 4, b parity) -> (x, y, operator word builder, C, g shift, right side)
def _double_cases():
    def word(*ops):
        return lambda i: [op.format(i=i, j=1 - i) for op in ops]
    return {
        (0, 1): (2, 0, word("f{i}", "f{i}"), 2, lambda n, z: [(1, (n - 2 * z - 1, 2 * z + 1)), (2, (n - 2 * z - 2, 2 * z + 2)), (1, (n - 2 * z - 3, 2 * z + 3))]),
        (1, 0): (2, 1, word("f{i}", "f{i}", "f{i}"), 6, lambda n, z: [(1, (n - 2 * z - 2, 2 * z + 2)), (1, (n - 2 * z - 3, 2 * z + 3))]),
        (1, 1): (3, 0, word("f{i}", "f{i}", "f{i}", "f{j}", "e{i}"), None, lambda n, z: [(1, (n - 2 * z - 1, 2 * z + 1)), (1, (n - 2 * z - 4, 2 * z + 4))]),
        (2, 0): (3, 1, word("f{i}", "f{i}", "f{i}", "f{j}"), 6, lambda n, z: [(2, (n - 2 * z - 2, 2 * z + 2)), (2, (n - 2 * z - 4, 2 * z + 4))]),
        (3, 0): (4, 1, word("f{i}", "f{i}", "f{i}", "f{j}", "f{j}"), 12, lambda n, z: [(1, (n - 2 * z - 2, 2 * z + 2)), (1, (n - 2 * z - 5, 2 * z + 5))]),
        (3, 1): (1, 0, word("f{i}"), 1, lambda n, z: [(1, (n - 2 * z - 1, 2 * z + 1)), (1, (n - 2 * z - 2, 2 * z + 2))]),
    }


def expansions_double(rep, count, convention):
    """Per-summand expansions (1/C) F S((n-x-y-2z-1, 2z+1)) for the double columns."""
    for (r4, parity), (x, y, word, C, rhs) in _double_cases().items():
        for n in _admissible(r4, 16, count, step=4):
            bar = P.bounds(n)[2]
            for b in range(1, bar + 1):
                if b % 2 != parity or not D.double_column_ok(n, b):
                    continue
                i = _bar_i(b)
                const = C if C is not None else 6 * (2 + (i == 0))
                for z in range(0, (n - x - y - 6) // 4 + 1):
                    if not g(n - 2 * b - x + y, 2 * z - b + y + 1):
                        continue
                    src = (n - x - y - 2 * z - 1, 2 * z + 1)
                    got = G.truncate_rows(G.apply_ops(G.FormalSum.spin(src), word(i), convention), 2)
                    _check(rep, f"double n={n} b={b} z={z}", got, const * _spin_sum(rhs(n, z)))


def expansions_bound(rep, count, convention):
    """The two operator words used for the upper bound (n = 0 mod 4, b even)."""
    for n in _admissible(0, 16, count, step=4):
        bar = P.bounds(n)[2]
        for b in range(2, bar + 1, 2):
            i = 0 if b % 4 == 0 else 1
            j = 1 - i
            for z in range(0, (n - 12) // 4 + 1):
                if (2 * z + 1 - (b - 1)) % 4 or n - 4 * z - 8 == 0:
                    continue
                src = (n - 2 * z - 7, 2 * z + 1)
                once = G.apply_ops(G.FormalSum.spin(src), [f"f{i}"] * 3 + [f"f{j}"] * 2 + [f"f{i}"], convention)
                want = _spin_sum([(2, (n - 2 * z - 2, 2 * z + 2)), (2, (n - 2 * z - 3, 2 * z + 3)),
                                  (2, (n - 2 * z - 5, 2 * z + 5)), (2, (n - 2 * z - 6, 2 * z + 6))])
                _check(rep, f"bound-word n={n} b={b} z={z}", G.truncate_rows(once, 2), 12 * want)
                twice = G.apply_f(once, i, convention)
                want = _spin_sum([(int(z != (n - 4) // 4), (n - 2 * z - 1, 2 * z + 2)),
                                  (2, (n - 2 * z - 2, 2 * z + 3)),
                                  (1 + int(z != (n - 12) // 4), (n - 2 * z - 5, 2 * z + 6)),
                                  (1, (n - 2 * z - 6, 2 * z + 7))])
                _check(rep, f"bound-word2 n={n} b={b} z={z}", G.truncate_rows(twice, 2), 24 * want)


def suite_expansions(count=3, convention=P.DEFAULT_BAR_CONVENTION, extended=True) -> SuiteReport:
    """Displayed Grothendieck-group expansions, each at the ``count`` smallest admissible n."""
    rep = SuiteReport("expansions")
    expansions_odd(rep, count, convention)
    expansions_b0(rep, count, convention)
    expansions_even(rep, count, convention)
    if extended:
        expansions_double(rep, count, convention)
        expansions_bound(rep, count, convention)
    return rep


# decomposition-matrix invariants ----------------------------------------------

@lru_cache(maxsize=None)
def _content(lam):
    return tuple(P.content(lam))


@lru_cache(maxsize=None)
def _bar_content(lam, convention):
    return tuple(P.bar_content(lam, convention))


def nonzero_cells(n):
    """(a, column, value) for every nonzero or bounded cell of the table for n."""
    small = P.bounds(n)[1]
    for col in D.classify_columns(n):
        for a in range(small + 1):
            v = D.entry(n, a, col)
            if v.tag is D.Tag.UNKNOWN or v.value == 0:
                continue
            yield a, col, v


def suite_blocks(max_n=200, convention=P.DEFAULT_BAR_CONVENTION) -> SuiteReport:
    """Nonzero cells only link characters lying in the same block."""
    rep = SuiteReport("blocks")
    for n in range(4, max_n + 1):
        for a, col, v in nonzero_cells(n):
            rep.checked += 1
            row = P.as_partition((n - a, a))
            if _bar_content(row, convention) != _content(col.partition):
                rep.fail(f"n={n} a={a} col={col} value={v}")
    return rep


def suite_basic_spin(max_n=200, convention=P.DEFAULT_BAR_CONVENTION) -> SuiteReport:
    """The basic spin character (n) shares a block with D^dbl(n), which it contains."""
    rep = SuiteReport("basic-spin")
    for n in range(1, max_n + 1):
        rep.checked += 1
        if _bar_content((n,), convention) != _content(P.dbl((n,))):
            rep.fail(f"n={n}")
    return rep


def suite_shift(max_n=100) -> SuiteReport:
    """Exact double entries depend only on n - 2b and a - b (a, b >= 1)."""
    rep = SuiteReport("shift")
    for n in range(4, max_n + 1):
        small, bar = P.bounds(n)[1:]
        small4, bar4 = P.bounds(n + 4)[1:]
        for b in range(1, bar + 1):
            if not (D.double_column_ok(n, b) and b + 2 <= bar4 and D.double_column_ok(n + 4, b + 2)):
                continue
            for a in range(1, min(small, small4 - 2) + 1):
                u, v = D.double_entry(n, a, b), D.double_entry(n + 4, a + 2, b + 2)
                if u.is_exact and v.is_exact:
                    rep.checked += 1
                    if u.value != v.value:
                        rep.fail(f"n={n} a={a} b={b}: {u} vs {v}")
    return rep


def suite_diagonal(max_n=200) -> SuiteReport:
    """double_entry(n, b, b) equals the regularisation multiplicity 2^{floor(h2/2)}."""
    rep = SuiteReport("diag")
    for n in range(4, max_n + 1):
        bar = P.bounds(n)[2]
        for b in range(1, bar + 1):
            if not D.double_column_ok(n, b):
                continue
            rep.checked += 1
            want = D.EntryValue.exact(2 ** (P.h2((n - b, b)) // 2))
            got = D.double_entry(n, b, b)
            if got != want:
                rep.fail(f"n={n} b={b}: {got} vs {want}")
    return rep


def suite_triangular(max_n=200) -> SuiteReport:
    """Double columns vanish above the diagonal."""
    rep = SuiteReport("triangular")
    for n in range(4, max_n + 1):
        small, bar = P.bounds(n)[1:]
        for b in range(1, bar + 1):
            if not D.double_column_ok(n, b):
                continue
            for a in range(min(b, small + 1)):
                rep.checked += 1
                if D.double_entry(n, a, b) != D.EntryValue.exact(0):
                    rep.fail(f"n={n} a={a} b={b}")
    return rep


def suite_straight_support(max_n=400) -> SuiteReport:
    """A nonzero straight entry forces n - 2a into 1..4."""
    rep = SuiteReport("straight-support")
    for n in range(4, max_n + 1):
        small = P.bounds(n)[1]
        for b in range((n - 3) // 2 + 1):
            for a in range(small + 1):
                rep.checked += 1
                if D.straight_entry(n, a, b) and n - 2 * a not in (1, 2, 3, 4):
                    rep.fail(f"n={n} a={a} b={b}")
    return rep


def suite_remark(max_n=200) -> SuiteReport:
    """For n = 0 mod 4 and b = n/2 - 2 mod 4 every bound cell is exact."""
    rep = SuiteReport("remark")
    for n in range(8, max_n + 1, 4):
        small, bar = P.bounds(n)[1:]
        for b in range(2, bar + 1, 2):
            if (b - (n // 2 - 2)) % 4 or not D.double_column_ok(n, b):
                continue
            for a in range(small + 1):
                rep.checked += 1
                res = D.resolve_bound(n, a, b)
                if not (res.bound == 0 or res.residue_two or res.valuation):
                    rep.fail(f"n={n} a={a} b={b}: valuation condition fails")
                if not D.double_entry(n, a, b).is_exact:
                    rep.fail(f"n={n} a={a} b={b}: not exact")
    return rep


def suite_bound_conditions(max_n=200) -> SuiteReport:
    """The valuation and vanishing conditions each imply the c-equation."""
    rep = SuiteReport("bound-conditions")
    for n in range(8, max_n + 1, 4):
        small, bar = P.bounds(n)[1:]
        for b in range(2, bar + 1, 2):
            if not D.double_column_ok(n, b):
                continue
            for a in range(b, small + 1):
                res = D.resolve_bound(n, a, b)
                if res.residue_two:
                    continue
                rep.checked += 1
                if (res.valuation or res.vanishing) and not res.c_equation:
                    rep.fail(f"n={n} a={a} b={b}: {res}")
    return rep


def suite_regularize(max_size=40) -> SuiteReport:
    """dbl(lam) = regularize(bar_dbl(lam)) whenever dbl(lam) is 2-regular."""
    rep = SuiteReport("regularize")
    for n in range(max_size + 1):
        for lam in P.strict_partitions(n):
            dl = P.dbl(lam)
            if not P.is_strict(dl):
                continue
            rep.checked += 1
            if P.regularize(P.bar_dbl(lam)) != dl:
                rep.fail(f"lam={lam}")
    return rep


def suite_g_closed_form(max_ell=2**16, m_low=-4, m_high_offset=2) -> SuiteReport:
    """Closed bitwise form of g against the digit-by-digit definition, exhaustively.

    Both sides are compiled with numba; the scalar :func:`spindec.dyadic.g`
    is tied to the compiled closed form by the unit tests.
    """
    from ._gcheck import count_disagreements

    rep = SuiteReport("g-closed-form")
    checked, bad, first = count_disagreements(max_ell, m_low, m_high_offset)
    rep.checked = int(checked)
    if bad:
        rep.fail(f"{bad} disagreements, first at ell={first[0]} m={first[1]}")
    return rep


def suite_convention_audit(max_n=200, count=3) -> SuiteReport:
    """Block checks and expansions under both bar-residue conventions.

    Passes iff the default convention has no violations and the alternative
    ("mod4-03") has at least one.
    """
    rep = SuiteReport("convention")
    other = [c for c in P.BAR_CONVENTIONS if c != P.DEFAULT_BAR_CONVENTION][0]
    for conv in P.BAR_CONVENTIONS:
        blocks = suite_blocks(max_n, conv)
        basic = suite_basic_spin(max_n, conv)
        exp = suite_expansions(count, conv, extended=False)
        rep.checked += blocks.checked + basic.checked + exp.checked
        nviol = len(blocks.failures) + len(basic.failures) + len(exp.failures)
        first = (blocks.failures + basic.failures + exp.failures)[:1]
        rep.notes.append(f"{conv}: blocks {len(blocks.failures)}, basic-spin {len(basic.failures)}, "
                         f"expansions {len(exp.failures)} violations" + (f"; first: {first[0]}" if first else ""))
        if conv == P.DEFAULT_BAR_CONVENTION and nviol:
            rep.fail(f"default convention {conv} has {nviol} violations")
        if conv == other and not nviol:
            rep.fail(f"alternative convention {conv} shows no violation")
    return rep


SUITES = {
    "case-identities": lambda cfg: suite_case_identities(cfg.case_max_n),
    "recurrence": lambda cfg: suite_recurrence(cfg.recurrence_max_k),
    "power": lambda cfg: suite_power_identity(cfg.power_max_n),
    "expansions": lambda cfg: suite_expansions(cfg.expansion_count),
    "blocks": lambda cfg: suite_blocks(cfg.blocks_max_n),
    "basic-spin": lambda cfg: suite_basic_spin(cfg.blocks_max_n),
    "shift": lambda cfg: suite_shift(cfg.shift_max_n),
    "diag": lambda cfg: suite_diagonal(cfg.diag_max_n),
    "triangular": lambda cfg: suite_triangular(cfg.diag_max_n),
    "straight-support": lambda cfg: suite_straight_support(cfg.support_max_n),
    "remark": lambda cfg: suite_remark(cfg.remark_max_n),
    "bound-conditions": lambda cfg: suite_bound_conditions(cfg.bound_max_n),
    "regularize": lambda cfg: suite_regularize(cfg.regularize_max_size),
    "g-closed-form": lambda cfg: suite_g_closed_form(cfg.g_max_ell),
    "convention": lambda cfg: suite_convention_audit(cfg.blocks_max_n, cfg.expansion_count),
}

# which config field --max-n overrides for each suite
MAX_N_FIELD = {
    "case-identities": "case_max_n",
    "recurrence": "recurrence_max_k",
    "power": "power_max_n",
    "expansions": "expansion_count",
    "blocks": "blocks_max_n",
    "basic-spin": "blocks_max_n",
    "shift": "shift_max_n",
    "diag": "diag_max_n",
    "triangular": "diag_max_n",
    "straight-support": "support_max_n",
    "remark": "remark_max_n",
    "bound-conditions": "bound_max_n",
    "regularize": "regularize_max_size",
    "g-closed-form": "g_max_ell",
    "convention": "blocks_max_n",
}


def run(names, cfg=VerifyConfig()):
    return [SUITES[name](cfg) for name in names]
