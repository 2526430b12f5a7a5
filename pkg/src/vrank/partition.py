"""Integer partitions as weakly decreasing tuples, plus Frobenius symbols.

A partition is stored as a tuple of positive integers in weakly decreasing
order; the empty tuple is the unique partition of 0.  All operations here are
pure functions on those tuples, so values are freely shareable and hashable.
"""

from typing import Iterable, NamedTuple

Partition = tuple[int, ...]

EMPTY: Partition = ()


class ResidueSplit(NamedTuple):
    selected: Partition
    complement: Partition
    residue: int


class FrobeniusSymbol(NamedTuple):
    top: tuple[int, ...]
    bottom: tuple[int, ...]


class InvalidPartitionError(ValueError):
    pass


class InvalidFrobeniusError(ValueError):
    pass


def make_partition(parts: Iterable[int]) -> Partition:
    """Sort parts into canonical (weakly decreasing) order, dropping nothing."""
    out = tuple(sorted(parts, reverse=True))
    if out and out[-1] < 1:
        raise InvalidPartitionError(f"parts must be positive, got {out[-1]}")
    return out


def check_partition(p: Partition) -> Partition:
    """Validate that p is already in canonical form."""
    for i in range(len(p) - 1):
        if p[i] < p[i + 1]:
            raise InvalidPartitionError(f"parts not weakly decreasing: {p}")
    if p and p[-1] < 1:
        raise InvalidPartitionError(f"parts must be positive: {p}")
    return p


def weight(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Transpose of the Ferrers graph.  Involution, weight preserving."""
    if not p:
        return EMPTY
    cols = [0] * p[0]
    for v in p:
        for i in range(v):
            cols[i] += 1
    return tuple(cols)


def union(p: Partition, q: Partition) -> Partition:
    """Multiset union of the parts, re-sorted."""
    return tuple(sorted(p + q, reverse=True))


def scale2(p: Partition) -> Partition:
    """Double every part."""
    return tuple(2 * v for v in p)


def halve(p: Partition) -> Partition:
    """Halve every part; rejects odd parts."""
    if any(v % 2 for v in p):
        raise InvalidPartitionError(f"halve requires even parts: {p}")
    return tuple(v // 2 for v in p)


def canonical_residue3(i: int) -> int:
    """Accept +1/-1 (or any integer spelling) and return the residue mod 3."""
    r = i % 3
    if r == 0:
        raise ValueError("residue must be nonzero mod 3")
    return r


def count_residue3(p: Partition, i: int) -> int:
    """Number of parts congruent to i mod 3 (i = -1 means parts == 2 mod 3)."""
    r = canonical_residue3(i)
    return sum(1 for v in p if v % 3 == r)


def split_by_residue3(p: Partition, i: int) -> ResidueSplit:
    """Split p into the parts == i mod 3 and the rest."""
    r = canonical_residue3(i)
    selected = tuple(v for v in p if v % 3 == r)
    complement = tuple(v for v in p if v % 3 != r)
    return ResidueSplit(selected, complement, r)


def is_staircase(p: Partition) -> bool:
    """True iff p is (k, k-1, ..., 2, 1) for some k >= 0."""
    return p == tuple(range(len(p), 0, -1))


def staircase(k: int) -> Partition:
    return tuple(range(k, 0, -1))


def all_parts_even(p: Partition) -> bool:
    return all(v % 2 == 0 for v in p)


def to_frobenius(p: Partition) -> FrobeniusSymbol:
    """Arm/leg lengths read off the Ferrers diagonal."""
    conj = conjugate(p)
    d = 0
    while d < len(p) and p[d] > d:
        d += 1
    top = tuple(p[i] - i - 1 for i in range(d))
    bottom = tuple(conj[i] - i - 1 for i in range(d))
    return FrobeniusSymbol(top, bottom)


def check_frobenius(f: FrobeniusSymbol) -> FrobeniusSymbol:
    top, bottom = f
    if len(top) != len(bottom):
        raise InvalidFrobeniusError(f"row lengths differ: {f}")
    for row in (top, bottom):
        if any(row[i] <= row[i + 1] for i in range(len(row) - 1)):
            raise InvalidFrobeniusError(f"rows must strictly decrease: {f}")
        if row and row[-1] < 0:
            raise InvalidFrobeniusError(f"rows must be nonnegative: {f}")
    return f


def from_frobenius(f: FrobeniusSymbol) -> Partition:
    """Rebuild the partition whose diagonal decomposition is f."""
    top, bottom = check_frobenius(f)
    d = len(top)
    rows = [top[i] + i + 1 for i in range(d)]
    cols = [bottom[i] + i + 1 for i in range(d)]
    # Rows below the diagonal come from the column (leg) lengths.
    extra = [sum(1 for c in cols if c > r) for r in range(d, max(cols, default=0))]
    return tuple(rows) + tuple(v for v in extra if v > 0)


def frobenius_weight(f: FrobeniusSymbol) -> int:
    return sum(f.top) + sum(f.bottom) + len(f.top)


# --- text grammar -----------------------------------------------------------

def format_partition(p: Partition) -> str:
    """`4+4+2+2+1`; the empty partition prints as `0`."""
    return "+".join(str(v) for v in p) if p else "0"


def parse_partition(s: str) -> Partition:
    s = s.strip()
    if s == "0":
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in s.split("+"))
    except ValueError as e:
        raise InvalidPartitionError(f"bad partition text {s!r}") from e
    return check_partition(parts)


def format_frobenius(f: FrobeniusSymbol) -> str:
    return "({};{})".format(
        ",".join(str(v) for v in f.top), ",".join(str(v) for v in f.bottom)
    )


def parse_frobenius(s: str) -> FrobeniusSymbol:
    s = s.strip()
    if not (s.startswith("(") and s.endswith(")")) or ";" not in s:
        raise InvalidFrobeniusError(f"bad Frobenius text {s!r}")
    top_s, bottom_s = s[1:-1].split(";")
    top = tuple(int(v) for v in top_s.split(",") if v != "")
    bottom = tuple(int(v) for v in bottom_s.split(",") if v != "")
    return check_frobenius(FrobeniusSymbol(top, bottom))
