"""Integer partitions: enumeration, dominance order, canonical total order.

A partition is a plain tuple of weakly decreasing positive ints; the empty
tuple is the empty partition.  Partitions index the power-sum and monomial
bases of the symmetric-function algebra, and the triangular eigen-solver
recurses along the dominance order.

Serialization: parts joined by commas ("2,1"); the empty partition is "-".
"""

from __future__ import annotations

from functools import lru_cache

Partition = tuple[int, ...]

LESS = "less"
EQUAL = "equal"
GREATER = "greater"
INCOMPARABLE = "incomparable"


class WeightMismatch(ValueError):
    """Dominance is only defined between partitions of equal weight."""


def check_partition(parts) -> Partition:
    t = tuple(int(x) for x in parts)
    if any(x <= 0 for x in t):
        raise ValueError(f"parts must be positive: {t}")
    if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {t}")
    return t


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def dominance_compare(a: Partition, b: Partition) -> str:
    """Compare partitions of equal weight in the dominance order.

    Returns one of "less", "equal", "greater", "incomparable"; a is less
    than b when every partial sum of a is <= the matching partial sum of b.
    """
    if sum(a) != sum(b):
        raise WeightMismatch(f"weights differ: |{a}| = {sum(a)}, |{b}| = {sum(b)}")
    if a == b:
        return EQUAL
    n = max(len(a), len(b))
    le = ge = True
    sa = sb = 0
    for i in range(n):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            ge = False
        elif sa > sb:
            le = False
    if le and not ge:
        return LESS
    if ge and not le:
        return GREATER
    return INCOMPARABLE


def dominates_or_equal(a: Partition, b: Partition) -> bool:
    """True iff a >= b in dominance (equal weights required)."""
    return dominance_compare(a, b) in (GREATER, EQUAL)


def grevlex_key(lam: Partition) -> tuple:
    """Sort key for the canonical total order: weight first, then
    graded-reverse-lexicographic on parts.  Within a fixed weight this
    order refines dominance (larger in dominance sorts larger)."""
    # grevlex: a > b iff the last nonzero entry of a - b is negative; pad
    # to length = weight so reversed tuples align, then negate.
    w = sum(lam)
    padded = lam + (0,) * (w - len(lam))
    return (w, tuple(-x for x in reversed(padded)))


def total_sort(partitions, reverse: bool = False) -> list[Partition]:
    """Deterministic total order on partitions of mixed weights:
    (weight, grevlex) ascending; with reverse=True the dominance-largest
    partition of the top weight comes first."""
    return sorted(partitions, key=grevlex_key, reverse=reverse)


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n with parts bounded by max_part."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)
    cap = n if max_part is None else min(max_part, n)
    out: list[Partition] = []
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(d: int) -> list[Partition]:
    """All partitions of weight <= d."""
    out: list[Partition] = []
    for n in range(d + 1):
        out.extend(partitions_of(n))
    return out


def remove_part(lam: Partition, part: int) -> Partition:
    """Partition with one copy of `part` removed."""
    idx = lam.index(part)
    return lam[:idx] + lam[idx + 1:]


def add_parts(lam: Partition, *parts: int) -> Partition:
    """Partition with extra parts inserted (zeros dropped)."""
    merged = list(lam)
    merged.extend(p for p in parts if p)
    merged.sort(reverse=True)
    return tuple(merged)


def multiplicity(lam: Partition, part: int) -> int:
    return lam.count(part)


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam) if lam else "-"


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
    return check_partition(parts)
