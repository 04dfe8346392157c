"""Young-diagram combinatorics in characteristic 2.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the empty partition. Nodes are ``(row, col)`` pairs, 1-based.
"""

from collections import Counter
from typing import NamedTuple

Partition = tuple
Node = tuple

# Bar-residue conventions, named by the columns j (mod 4) that get bar-residue 0.
# "mod4-01" is the one consistent with the block rule and is used by default.
BAR_CONVENTIONS = ("mod4-01", "mod4-03")
DEFAULT_BAR_CONVENTION = "mod4-01"


class PartitionSyntaxError(ValueError):
    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"bad partition {text!r} at position {position}: {reason}")


class ContentPair(NamedTuple):
    c0: int
    c1: int


class Signature(NamedTuple):
    eps: int
    phi: int
    normal: tuple
    conormal: tuple


def as_partition(parts) -> Partition:
    """Validate and normalise a sequence into a partition (trailing zeros dropped)."""
    parts = [int(p) for p in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    for k, p in enumerate(parts):
        if p <= 0:
            raise ValueError(f"non-positive part {p} in {parts}")
        if k and p > parts[k - 1]:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    return tuple(parts)


def parse_partition(text: str) -> Partition:
    """Parse the ``"a,b,c"`` syntax. Empty or blank text is the empty partition."""
    if text.strip() == "":
        return ()
    parts = []
    pos = 0
    for chunk in text.split(","):
        stripped = chunk.strip()
        start = pos + (len(chunk) - len(chunk.lstrip()))
        if not stripped:
            raise PartitionSyntaxError(text, start, "empty part")
        if not stripped.isdigit():
            bad = next(k for k, ch in enumerate(stripped) if not ch.isdigit())
            raise PartitionSyntaxError(text, start + bad, f"unexpected character {stripped[bad]!r}")
        value = int(stripped)
        if value == 0:
            raise PartitionSyntaxError(text, start, "parts must be positive")
        if parts and value > parts[-1]:
            raise PartitionSyntaxError(text, start, "parts must be weakly decreasing")
        parts.append(value)
        pos += len(chunk) + 1
    return tuple(parts)


def format_partition(lam) -> str:
    return ",".join(str(p) for p in lam)


def size(lam) -> int:
    return sum(lam)


def h(lam) -> int:
    """Number of parts."""
    return len(lam)


def h2(lam) -> int:
    """Number of even parts."""
    return sum(1 for p in lam if p % 2 == 0)


def is_strict(lam) -> bool:
    """Strictly decreasing positive parts (2-regular)."""
    return all(p > 0 for p in lam) and all(lam[k] > lam[k + 1] for k in range(len(lam) - 1))


def _require_strict(lam, what):
    if not is_strict(lam):
        raise ValueError(f"{what} needs a strict partition, got {lam}")


def dbl(lam) -> Partition:
    """Replace each part a by (ceil((a+1)/2), floor((a-1)/2)), dropping trailing zeros.

    The result is a plain sequence and need not be a partition:
    dbl((3,2)) = (2,1,2), and dbl((2,1)) = (2,0,1) keeps its interior zero.
    Such sequences are never 2-regular.
    """
    _require_strict(lam, "dbl")
    out = []
    for a in lam:
        out += [(a + 2) // 2, (a - 1) // 2]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def bar_dbl(lam) -> Partition:
    """Replace each part a by (ceil(a/2), floor(a/2)), dropping zeros."""
    _require_strict(lam, "bar_dbl")
    out = []
    for a in lam:
        out += [(a + 1) // 2, a // 2]
    return as_partition([p for p in out if p > 0])


def nodes(lam):
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            yield (i, j)


def ladder(node) -> int:
    i, j = node
    return i + j - 1


def ladder_counts(lam) -> Counter:
    return Counter(ladder(A) for A in nodes(lam))


def regularize(lam) -> Partition:
    """2-regularisation: move every node to the top of its ladder.

    Ladder L holds the nodes (i, j) with i + j - 1 = L; its r-th highest
    position is (r, L - r + 1).
    """
    counts = ladder_counts(lam)
    rows = Counter()
    for L, c in counts.items():
        for r in range(1, c + 1):
            rows[r] += 1
            assert L - r + 1 >= 1
    out = as_partition([rows[r] for r in range(1, len(rows) + 1)])
    assert ladder_counts(out) == counts, (lam, out)
    return out


def residue(node) -> int:
    i, j = node
    return (j - i) % 2


def bar_residue(node, convention=DEFAULT_BAR_CONVENTION) -> int:
    j = node[1] % 4
    if convention == "mod4-01":
        return 0 if j in (0, 1) else 1
    if convention == "mod4-03":
        return 0 if j in (0, 3) else 1
    raise ValueError(f"unknown bar-residue convention {convention!r}")


def content(lam) -> ContentPair:
    c = [0, 0]
    for A in nodes(lam):
        c[residue(A)] += 1
    return ContentPair(*c)


def bar_content(lam, convention=DEFAULT_BAR_CONVENTION) -> ContentPair:
    _require_strict(lam, "bar_content")
    c = [0, 0]
    for A in nodes(lam):
        c[bar_residue(A, convention)] += 1
    return ContentPair(*c)


def add_node(lam, node) -> Partition:
    i, j = node
    parts = list(lam)
    if i == len(parts) + 1:
        parts.append(0)
    parts[i - 1] += 1
    assert parts[i - 1] == j
    return tuple(parts)


def remove_node(lam, node) -> Partition:
    i, j = node
    parts = list(lam)
    assert parts[i - 1] == j
    parts[i - 1] -= 1
    return as_partition(parts)


def addable(lam) -> set:
    out = set()
    for i in range(1, len(lam) + 2):
        j = (lam[i - 1] if i <= len(lam) else 0) + 1
        if i == 1 or lam[i - 2] >= j:
            out.add((i, j))
    return out


def removable(lam) -> set:
    out = set()
    for i, part in enumerate(lam, start=1):
        if i == len(lam) or lam[i] < part:
            out.add((i, part))
    return out


def bar_addable(lam) -> set:
    _require_strict(lam, "bar_addable")
    return {A for A in addable(lam) if is_strict(add_node(lam, A))}


def bar_removable(lam) -> set:
    _require_strict(lam, "bar_removable")
    return {A for A in removable(lam) if is_strict(remove_node(lam, A))}


def signature(lam, i) -> Signature:
    """Reduced i-signature of ``lam``.

    Removable i-nodes give ``-`` and addable i-nodes ``+``, read from bottom
    left to top right. Adjacent ``-+`` pairs are cancelled until the word has
    the shape ``+...+-...-``; surviving ``-`` nodes are normal, surviving
    ``+`` nodes conormal (both returned in reading order).
    """
    marked = [(A, "-") for A in removable(lam) if residue(A) == i]
    marked += [(A, "+") for A in addable(lam) if residue(A) == i]
    marked.sort(key=lambda item: item[0][1])
    stack = []
    for A, sign in marked:
        if sign == "+" and stack and stack[-1][1] == "-":
            stack.pop()
        else:
            stack.append((A, sign))
    normal = tuple(A for A, s in stack if s == "-")
    conormal = tuple(A for A, s in stack if s == "+")
    return Signature(len(normal), len(conormal), normal, conormal)


def tilde_e(lam, i) -> Partition:
    """Remove the leftmost i-normal node."""
    sig = signature(lam, i)
    if not sig.eps:
        raise ValueError(f"{lam} has no {i}-normal node")
    return remove_node(lam, sig.normal[0])


def tilde_f(lam, i) -> Partition:
    """Add the rightmost i-conormal node."""
    sig = signature(lam, i)
    if not sig.phi:
        raise ValueError(f"{lam} has no {i}-conormal node")
    return add_node(lam, sig.conormal[-1])


def dominates(mu, lam) -> bool:
    """True iff ``mu`` dominates ``lam`` (equal sizes required)."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal sizes: {mu} vs {lam}")
    s = t = 0
    for k in range(max(len(mu), len(lam))):
        s += mu[k] if k < len(mu) else 0
        t += lam[k] if k < len(lam) else 0
        if s < t:
            return False
    return True


def bounds(n: int):
    """(M_n, m_n, mbar_n): largest a with (n-a, a) a partition, a strict
    partition, and with dbl(n-a, a) 2-regular."""
    if n < 1:
        raise ValueError(f"bounds needs n >= 1, got {n}")
    big = n // 2
    small = (n - 1) // 2
    bar = (n - 6) // 2 if n % 4 == 0 else (n - 4) // 2
    return big, small, bar


def partitions(n, max_part=None):
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def strict_partitions(n, max_part=None):
    """All strict partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            yield (first,) + rest
