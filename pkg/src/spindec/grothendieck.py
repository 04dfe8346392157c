"""Integer combinations of Specht classes Sym(lam) and spin classes Spin(lam),
with the block-refined restriction/induction operators e_i, f_i."""

from typing import NamedTuple

from . import partitions as P

SYM = "Sym"
SPIN = "Spin"


class Basis(NamedTuple):
    kind: str
    lam: tuple

    def __str__(self):
        return f"{self.kind}({P.format_partition(self.lam)})"


def _ordered(items):
    # Sym before Spin, then partitions in descending lexicographic order
    items = sorted(items, key=lambda kv: kv[0].lam, reverse=True)
    return sorted(items, key=lambda kv: kv[0].kind != SYM)


class FormalSum:
    """Immutable map Basis -> nonzero int coefficient, homogeneous in kind and size."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for basis, coeff in dict(terms or {}).items():
            basis = Basis(basis[0], P.as_partition(basis[1]))
            if basis.kind not in (SYM, SPIN):
                raise ValueError(f"unknown basis kind {basis.kind!r}")
            if basis.kind == SPIN and not P.is_strict(basis.lam):
                raise ValueError(f"Spin class needs a strict partition, got {basis.lam}")
            coeff = int(coeff)
            if coeff:
                clean[basis] = clean.get(basis, 0) + coeff
                if not clean[basis]:
                    del clean[basis]
        kinds = {b.kind for b in clean}
        sizes = {sum(b.lam) for b in clean}
        if len(kinds) > 1 or len(sizes) > 1:
            raise ValueError("FormalSum terms must share one kind and one size")
        self._terms = clean

    @classmethod
    def sym(cls, lam, coeff=1):
        return cls({Basis(SYM, tuple(lam)): coeff})

    @classmethod
    def spin(cls, lam, coeff=1):
        return cls({Basis(SPIN, tuple(lam)): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    @property
    def kind(self):
        return next(iter(self._terms)).kind if self._terms else None

    @property
    def n(self):
        return sum(next(iter(self._terms)).lam) if self._terms else None

    def items(self):
        return _ordered(self._terms.items())

    def coefficient(self, basis):
        return self._terms.get(Basis(basis[0], tuple(basis[1])), 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        merged = dict(self._terms)
        for b, c in other._terms.items():
            merged[b] = merged.get(b, 0) + c
        return FormalSum(merged)

    def __neg__(self):
        return FormalSum({b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return FormalSum({b: k * c for b, c in self._terms.items()})

    def __repr__(self):
        return f"FormalSum({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for k, (b, c) in enumerate(self.items()):
            if k == 0:
                out = f"{c}*{b}" if c > 0 else f"-{-c}*{b}"
            else:
                out += f" + {c}*{b}" if c > 0 else f" - {-c}*{b}"
        return out


def _x_spin(lam, node, adding):
    """Exponent x_A for spin branching: 1 off the first-column end node when n - h is odd."""
    n, hl = sum(lam), len(lam)
    end = (hl + 1, 1) if adding else (hl, 1)
    return 1 if (node != end and (n - hl) % 2 == 1) else 0


def _branch(basis, i, adding, convention):
    lam = basis.lam
    if basis.kind == SYM:
        cands = P.addable(lam) if adding else P.removable(lam)
        for A in cands:
            if P.residue(A) == i:
                yield (P.add_node(lam, A) if adding else P.remove_node(lam, A)), 1
    else:
        cands = P.bar_addable(lam) if adding else P.bar_removable(lam)
        for A in cands:
            if P.bar_residue(A, convention) == i:
                mu = P.add_node(lam, A) if adding else P.remove_node(lam, A)
                yield mu, 2 ** _x_spin(lam, A, adding)


def _apply(v, i, adding, convention):
    if i not in (0, 1):
        raise ValueError(f"residue must be 0 or 1, got {i}")
    out = {}
    for basis, coeff in v.terms.items():
        for mu, weight in _branch(basis, i, adding, convention):
            key = Basis(basis.kind, mu)
            out[key] = out.get(key, 0) + coeff * weight
    return FormalSum(out)


def apply_e(v: FormalSum, i: int, convention=P.DEFAULT_BAR_CONVENTION) -> FormalSum:
    """e_i: remove one (bar-)removable node of residue i, linearly."""
    return _apply(v, i, False, convention)


def apply_f(v: FormalSum, i: int, convention=P.DEFAULT_BAR_CONVENTION) -> FormalSum:
    """f_i: add one (bar-)addable node of residue i, linearly."""
    return _apply(v, i, True, convention)


def apply_ops(v: FormalSum, ops, convention=P.DEFAULT_BAR_CONVENTION) -> FormalSum:
    """Apply a word such as ``["f1", "f1", "e0"]`` left to right."""
    for op in ops:
        op = op.strip()
        if len(op) != 2 or op[0] not in "ef" or op[1] not in "01":
            raise ValueError(f"bad operator {op!r}; expected e0, e1, f0 or f1")
        fn = apply_e if op[0] == "e" else apply_f
        v = fn(v, int(op[1]), convention)
    return v


def truncate_rows(v: FormalSum, maxrows: int) -> FormalSum:
    """Drop every term whose partition has more than ``maxrows`` parts."""
    return FormalSum({b: c for b, c in v.terms.items() if len(b.lam) <= maxrows})


def block_component(v: FormalSum, c, convention=P.DEFAULT_BAR_CONVENTION) -> FormalSum:
    """Keep the terms lying in the block with content ``c``."""
    c = tuple(c)
    keep = {}
    for b, coeff in v.terms.items():
        cont = P.content(b.lam) if b.kind == SYM else P.bar_content(b.lam, convention)
        if tuple(cont) == c:
            keep[b] = coeff
    return FormalSum(keep)
