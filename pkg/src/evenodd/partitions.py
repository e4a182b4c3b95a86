"""Partitions, parity decomposition, family membership and enumeration oracles.

A partition is a tuple of positive integers in non-increasing order.  Three
families of partitions are counted throughout this package:

* kind "A": partitions whose parts avoid the residues 0, i and 5-i mod 5,
* kind "B": partitions whose successive parts differ by at least 2, with at
  most i-1 parts equal to the minimum allowed part,
* kind "P": the even-odd family, where every even part is at least twice the
  length (plus a shift) and odd parts two positions apart differ by at least 4.

Each family comes with an index i in {1, 2} and a minimum part (1 for the base
families, 2k or 2k+1 for the shifted variants).
"""

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

Partition = tuple[int, ...]


def as_partition(parts) -> Partition:
    """Validate and normalize a sequence of parts into a Partition tuple.

    Raises ValueError unless every part is a positive integer and the
    sequence is non-increasing.
    """
    p = tuple(parts)
    for x in p:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError("parts must be positive integers, got %r" % (x,))
    if any(p[t] < p[t + 1] for t in range(len(p) - 1)):
        raise ValueError("parts must be non-increasing, got %r" % (p,))
    return p


class ParitySplit:
    """Even and odd subsequences of a partition, with their lengths r1, r2."""

    __slots__ = ("evens", "odds")

    def __init__(self, evens: Partition, odds: Partition):
        self.evens = evens
        self.odds = odds

    @property
    def r1(self) -> int:
        return len(self.evens)

    @property
    def r2(self) -> int:
        return len(self.odds)

    def __eq__(self, other):
        return (
            isinstance(other, ParitySplit)
            and self.evens == other.evens
            and self.odds == other.odds
        )

    def __repr__(self):
        return "ParitySplit(evens=%r, odds=%r)" % (self.evens, self.odds)


def parity_split(p: Partition) -> ParitySplit:
    """Split a partition into its even and odd subsequences.

    Both subsequences keep the non-increasing order of the source; merging
    them as multisets recovers the partition.
    """
    evens = tuple(x for x in p if x % 2 == 0)
    odds = tuple(x for x in p if x % 2 == 1)
    return ParitySplit(evens, odds)


_KINDS = ("A", "B", "P")


@dataclass(frozen=True)
class FamilySpec:
    """Selects one counted family: kind in {A, B, P}, index i, minimum part.

    min_part is 1 for the base families; the shifted variants use 2k+1 or 2k.
    Kind A admits no shifted variant, so it requires min_part == 1.
    """

    kind: str
    i: int
    min_part: int = 1

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError("kind must be one of %r, got %r" % (_KINDS, self.kind))
        if self.i not in (1, 2):
            raise ValueError("i must be 1 or 2, got %r" % (self.i,))
        if not isinstance(self.min_part, int) or self.min_part < 1:
            raise ValueError("min_part must be a positive integer, got %r" % (self.min_part,))
        if self.kind == "A" and self.min_part != 1:
            raise ValueError("kind A has no shifted variant; min_part must be 1")

    def to_dict(self) -> dict:
        return {"kind": self.kind, "i": self.i, "min_part": self.min_part}

    @classmethod
    def from_dict(cls, d: dict) -> "FamilySpec":
        return cls(kind=d["kind"], i=int(d["i"]), min_part=int(d.get("min_part", 1)))

    def label(self) -> str:
        return "%s(i=%d,min_part=%d)" % (self.kind, self.i, self.min_part)


def part_allowed_for_A(x: int, i: int) -> bool:
    """True iff x avoids the residues 0, i and 5-i modulo 5."""
    return x % 5 not in (0, i, 5 - i)


def is_member(p: Partition, f: FamilySpec) -> bool:
    """Membership predicate for a canonical partition in family f.

    All gap clauses are vacuous when the relevant parity class has fewer
    than 3 parts; the smallest-part bound clauses are vacuous when that
    parity class is empty.  The empty partition belongs to every family.
    """
    j = f.min_part
    if p and p[-1] < j:
        return False
    if f.kind == "A":
        return all(part_allowed_for_A(x, f.i) for x in p)
    if sum(1 for x in p if x == j) > f.i - 1:
        return False
    if f.kind == "B":
        return all(p[t] - p[t + 1] >= 2 for t in range(len(p) - 1))
    # kind P
    m = len(p)
    evens = [x for x in p if x % 2 == 0]
    odds = [x for x in p if x % 2 == 1]
    if j % 2 == 1:
        k = (j - 1) // 2
        if evens and evens[-1] < 2 * (m + k):
            return False
        gap_class = odds
    else:
        k = j // 2
        if odds and odds[-1] + 1 < 2 * (m + k):
            return False
        gap_class = evens
    return all(gap_class[t] - gap_class[t + 2] >= 4 for t in range(len(gap_class) - 2))


def enumerate_partitions(
    n: int, fixed_length: Optional[int] = None, min_part: int = 1
) -> Iterator[Partition]:
    """Yield every partition of n, lexicographically decreasing.

    With fixed_length, only partitions of exactly that many parts are
    produced; with min_part, every part is at least that value.  The empty
    partition appears only for n == 0 with fixed_length absent or 0.
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(rem, maxp, left):
        if rem == 0:
            if left is None or left == 0:
                yield ()
            return
        if left == 0 or maxp < min_part:
            return
        hi = min(maxp, rem)
        lo = min_part
        if left is not None:
            # rem must split into exactly `left` parts from [min_part, v]
            if rem < left * min_part:
                return
            hi = min(hi, rem - (left - 1) * min_part)
            lo = max(lo, -(-rem // left))
        for v in range(hi, lo - 1, -1):
            for tail in gen(rem - v, v, None if left is None else left - 1):
                yield (v,) + tail

    return gen(n, n, fixed_length)


def _max_gap2_sum(maxp: int, lo: int) -> int:
    """Largest weight of a gap->=2 partition with parts in [lo, maxp]."""
    if maxp < lo:
        return 0
    t = (maxp - lo) // 2 + 1
    return t * maxp - t * (t - 1)


def _enumerate_B(n, i, j, fixed_length):
    # gap >= 2 forces distinct parts, so "at most i-1 parts equal j" reduces
    # to a floor: lo = j for i=2, lo = j+1 for i=1
    lo = j if i == 2 else j + 1

    def gen(rem, maxp, left):
        if rem == 0:
            if left is None or left == 0:
                yield ()
            return
        if left == 0:
            return
        hi = min(maxp, rem)
        if left is not None and left > 1:
            # keep room for `left-1` smaller parts, the tightest packing
            # below v being v-2, v-4, ...
            hi = min(hi, rem - ((left - 1) * lo + (left - 1) * (left - 2)))
        for v in range(hi, lo - 1, -1):
            r = rem - v
            if r > _max_gap2_sum(v - 2, lo):
                break
            if r > 0 and r < lo:
                continue
            for tail in gen(r, v - 2, None if left is None else left - 1):
                yield (v,) + tail

    return gen(n, n, fixed_length)


def _enumerate_P(n, i, j, fixed_length):
    if fixed_length is not None:
        yield from _p_members_fixed(n, i, j, fixed_length)
        return
    out = []
    for m in range(0, n // j + 1 if n else 1):
        out.extend(_p_members_fixed(n, i, j, m))
    out.sort(reverse=True)
    yield from out


def _p_members_fixed(n, i, j, m):
    """List the even-odd family members with exactly m parts."""
    if m == 0:
        return [()] if n == 0 else []
    if n < m * j:
        return []
    if j % 2 == 1:
        k = (j - 1) // 2
        bound_parity, bound = 0, 2 * (m + k)
    else:
        k = j // 2
        bound_parity, bound = 1, 2 * (m + k) - 1
    limit = i - 1
    out = []

    def gen(rem, prev, left, jcount, prefix, g1, g2):
        if left == 0:
            if rem == 0:
                out.append(prefix)
            return
        hi = min(prev, rem - (left - 1) * j)
        lo = max(j, -(-rem // left))
        for v in range(hi, lo - 1, -1):
            if v % 2 == bound_parity:
                if v < bound:
                    continue
            else:
                # two-apart gap: v lands two positions after g1 in its class
                if g1 is not None and g1 - v < 4:
                    continue
            nj = jcount + (1 if v == j else 0)
            if nj > limit:
                continue
            if v % 2 == bound_parity:
                gen(rem - v, v, left - 1, nj, prefix + (v,), g1, g2)
            else:
                gen(rem - v, v, left - 1, nj, prefix + (v,), g2, v)

    gen(n, n, m, 0, (), None, None)
    return out


def _enumerate_A(n, i, fixed_length):
    def gen(rem, maxp, left):
        if rem == 0:
            if left is None or left == 0:
                yield ()
            return
        if left == 0:
            return
        hi = min(maxp, rem)
        if left is not None:
            if rem < left:
                return
            hi = min(hi, rem - (left - 1))
        for v in range(hi, 0, -1):
            if not part_allowed_for_A(v, i):
                continue
            for tail in gen(rem - v, v, None if left is None else left - 1):
                yield (v,) + tail

    return gen(n, n, fixed_length)


def enumerate_family(
    n: int, f: FamilySpec, fixed_length: Optional[int] = None
) -> Iterator[Partition]:
    """Yield the members of family f at weight n, lexicographically decreasing.

    Agrees with filtering enumerate_partitions through is_member for every n
    where both are feasible.  The B enumerator prunes on the gap structure
    (output-proportional cost, usable far beyond the unrestricted oracle);
    the P enumerator prunes on the per-length part bounds.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if f.kind == "A":
        yield from _enumerate_A(n, f.i, fixed_length)
    elif f.kind == "B":
        yield from _enumerate_B(n, f.i, f.min_part, fixed_length)
    else:
        yield from _enumerate_P(n, f.i, f.min_part, fixed_length)


def count_family(n: int, f: FamilySpec, fixed_length: Optional[int] = None) -> int:
    """Number of members of family f at weight n (optionally of fixed length)."""
    return sum(1 for _ in enumerate_family(n, f, fixed_length))


def counts_by_length(n: int, f: FamilySpec) -> Counter:
    """Counter mapping length m to the number of members of f at weight n.

    One enumeration pass; cheaper than calling count_family per length when
    a whole column of refined counts is needed.
    """
    c = Counter()
    for p in enumerate_family(n, f):
        c[len(p)] += 1
    return c
