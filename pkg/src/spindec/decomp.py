"""Closed formulas for [S((n-a,a),eps) : D^mu] in characteristic 2.

Columns mu are either two-part partitions (n-b, b) ("straight") or doubles
dbl(n-b, b) ("double"). Entries do not depend on eps.
"""

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import partitions as P
from .dyadic import d, g, nu2


class Tag(enum.Enum):
    EXACT = "exact"
    AT_MOST = "at_most"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class EntryValue:
    tag: Tag
    value: Optional[int] = None

    def __post_init__(self):
        if self.tag is Tag.UNKNOWN:
            if self.value is not None:
                raise ValueError("Unknown entries carry no value")
            return
        if self.value is None or self.value < 0:
            raise ValueError(f"{self.tag.name} needs a value >= 0, got {self.value}")
        if self.tag is Tag.AT_MOST and self.value == 0:
            # a vanishing upper bound pins the entry
            object.__setattr__(self, "tag", Tag.EXACT)

    @classmethod
    def exact(cls, v):
        return cls(Tag.EXACT, int(v))

    @classmethod
    def at_most(cls, v):
        return cls(Tag.AT_MOST, int(v))

    @classmethod
    def unknown(cls):
        return cls(Tag.UNKNOWN)

    @property
    def is_exact(self):
        return self.tag is Tag.EXACT

    def __str__(self):
        if self.tag is Tag.EXACT:
            return str(self.value)
        if self.tag is Tag.AT_MOST:
            return f"<={self.value}"
        return "?"


class Column(NamedTuple):
    kind: str  # "straight" or "double"
    b: int
    n: int

    @property
    def partition(self):
        if self.kind == "straight":
            return P.as_partition((self.n - self.b, self.b))
        return P.dbl(P.as_partition((self.n - self.b, self.b)))

    def __str__(self):
        return f"{self.kind}:{self.b}"


def _check_row(n, a, top):
    if not 0 <= a <= top:
        raise ValueError(f"row index a={a} out of range 0..{top} for n={n}")


def james_specht(n, a, b):
    """[S^(n-a,a) : D^(n-b,b)] = g(n-2b+1, a-b) (James)."""
    big, small, _ = P.bounds(n)
    _check_row(n, a, big)
    if not 0 <= b <= small:
        raise ValueError(f"column b={b} out of range 0..{small} for n={n}")
    return g(n - 2 * b + 1, a - b)


def straight_support(n, b):
    """Values of n - 2a for which the straight column b is nonzero."""
    r, odd_b = n % 8, b % 2 == 1
    out = set()
    if n % 2 == 0:
        out.add(2)
    if (r == 0 and not odd_b) or (r == 4 and odd_b):
        out.add(4)
    if r in (1, 3):
        out.add(3 if odd_b else 1)
    if r in (5, 7):
        out.add(1 if odd_b else 3)
    return out


def straight_entry(n, a, b):
    """[S((n-a,a),eps) : D^(n-b,b)] for 0 <= b <= (n-3)/2."""
    _, small, _ = P.bounds(n)
    _check_row(n, a, small)
    if not 0 <= b <= (n - 3) // 2:
        raise ValueError(f"straight column b={b} out of range 0..{(n - 3) // 2} for n={n}")
    if n - 2 * a in straight_support(n, b):
        return 2 ** d(n - 2 * b + 1)
    return 0


def double_column_ok(n, b):
    _, _, bar = P.bounds(n)
    return 0 <= b <= bar and P.is_strict(P.dbl(P.as_partition((n - b, b))))


def _check_double(n, a, b):
    _, small, _ = P.bounds(n)
    _check_row(n, a, small)
    if not double_column_ok(n, b):
        raise ValueError(f"double column b={b} is not defined for n={n}")


def upper_bound(n, a, b):
    """2 g(n-2b-3, a-b) + 2 g(n-2b-3, a-b-3)."""
    return 2 * g(n - 2 * b - 3, a - b) + 2 * g(n - 2 * b - 3, a - b - 3)


def _bound_case(n, b):
    return n % 4 == 0 and b % 2 == 0 and b >= 2


def equality_condition(n, b, c):
    """Does the c-equation certifying the upper bound hold?

    Compares g(n-2b+1, c-b) + g(n-2b-1, c-b-1) - g(n-2b-3, c-b-2) with its
    even/odd right-hand side (delta = [c != n/2]).
    """
    if not (n % 4 == 0 and b % 2 == 0 and 2 <= b <= (n - 6) // 2):
        raise ValueError(f"equality condition needs n = 0 mod 4 and even 2 <= b <= (n-6)/2; got n={n}, b={b}")
    k = n - 2 * b
    lhs = g(k + 1, c - b) + g(k - 1, c - b - 1) - g(k - 3, c - b - 2)
    if c % 2 == 0:
        delta = int(c != n // 2)
        rhs = delta * g(k - 4, c - b) + (1 + delta) * g(k - 4, c - b - 4)
    else:
        rhs = 2 * g(k - 4, c - b - 1) + g(k - 4, c - b - 5)
    return lhs == rhs


class BoundResolution(NamedTuple):
    bound: int
    residue_two: bool  # a - b = 2 mod 4
    valuation: bool
    vanishing: bool
    c_equation: bool

    @property
    def exact(self):
        return self.bound == 0 or self.residue_two or self.valuation or self.vanishing or self.c_equation


def resolve_bound(n, a, b) -> BoundResolution:
    """Evaluate the bound and all three sufficient conditions for equality."""
    _check_double(n, a, b)
    if not _bound_case(n, b):
        raise ValueError(f"n={n}, b={b} is not a bound column")
    bound = upper_bound(n, a, b)
    q = (a - b + 1) // 4
    if q == 0:
        valuation = True  # nu2(0) = +infinity
    elif q < 0:
        valuation = False
    else:
        valuation = nu2(q) >= nu2((n - 2 * b) // 4)
    vanishing = g(n - 2 * b - 4, 4 * q - 4) == 0
    c_equation = any(
        equality_condition(n, b, c)
        for c in (a, a + 1)
        if (c - b) % 4 in (0, 1)
    )
    return BoundResolution(bound, (a - b) % 4 == 2, valuation, vanishing, c_equation)


def double_entry(n, a, b) -> EntryValue:
    """[S((n-a,a),eps) : D^dbl(n-b,b)] as Exact, AtMost or Unknown."""
    _check_double(n, a, b)
    if b == 0:
        if a == 0:
            return EntryValue.exact(2 ** (P.h2((n,)) // 2))
        return EntryValue.unknown()
    k = n - 2 * b
    r = n % 4
    odd_b = b % 2 == 1
    if (r == 1 and not odd_b) or (r in (2, 3) and odd_b):
        return EntryValue.exact(g(k, a - b))
    if r == 2 and not odd_b:
        return EntryValue.exact(2 * g(k, a - b))
    if (r == 1 and odd_b) or (r == 3 and not odd_b):
        return EntryValue.exact(g(k, a - b) - g(k - 2, a - b - 1))
    if r == 0 and odd_b:
        return EntryValue.exact(g(k, a - b) + 2 * g(k - 2, a - b - 1))

    # n = 0 mod 4, b even >= 2: upper bound, exact under sufficient conditions
    bound = upper_bound(n, a, b)
    if bound == 0 or (a - b) % 4 == 2:
        return EntryValue.exact(0)
    q = (a - b + 1) // 4
    if q == 0 or (q > 0 and nu2(q) >= nu2(k // 4)):
        return EntryValue.exact(bound)
    if g(k - 4, 4 * q - 4) == 0:
        return EntryValue.exact(bound)
    for c in (a, a + 1):
        if (c - b) % 4 in (0, 1) and equality_condition(n, b, c):
            return EntryValue.exact(bound)
    return EntryValue.at_most(bound)


def classify_columns(n):
    """Candidate composition factors of the two-part spin characters of n.

    Straight columns (n-b, b) for b <= (n-3)/2, then dbl(n-b, b) for
    b <= mbar_n; the b = 0 double is dbl(n) = (n - m_n, m_n). Sorted in
    descending lexicographic order of the column partition.
    """
    if n < 4:
        raise ValueError(f"classify_columns needs n >= 4, got {n}")
    cols = [Column("straight", b, n) for b in range((n - 3) // 2 + 1)]
    cols += [Column("double", b, n) for b in range(P.bounds(n)[2] + 1) if double_column_ok(n, b)]
    cols.sort(key=lambda col: col.partition, reverse=True)
    return cols


def entry(n, a, col: Column) -> EntryValue:
    if col.kind == "straight":
        return EntryValue.exact(straight_entry(n, a, col.b))
    if col.kind == "double":
        return double_entry(n, a, col.b)
    raise ValueError(f"unknown column kind {col.kind!r}")
