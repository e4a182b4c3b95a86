"""Recurrence tables for length-refined family counts and identity sweeps.

Three recursion systems determine the refined counts t(i, m, n).  They share
one shape, parametrized by an offset a:

    t(1, m, n) = t(1, m-1, n-2m-a) + t(2, m, n-2m)
    t(2, m, n) = t(1, m, n) + t(2, m-1, n-2m-a+1)

with base value 1 at (m, n) = (0, 0) and 0 whenever m <= 0 or n <= 0
otherwise.  System1 has a = 0 and governs the base families (minimum part 1);
System2(k) has a = 2k for minimum part 2k+1; System3(k) has a = 2k-1 for
minimum part 2k.  Every recursive reference lowers n, so tables fill in
increasing n with i=1 computed before i=2 at each cell.
"""

import json
from dataclasses import dataclass, field

from .partitions import FamilySpec, counts_by_length


class CountTable:
    """Memoized table of refined counts for one recursion system."""

    def __init__(self, variant: str, offset: int):
        self.variant = variant
        self.offset = offset
        self._cells = {}
        self._filled_to = -1

    def _get(self, i, m, n):
        if m == 0 and n == 0:
            return 1
        if m <= 0 or n <= 0:
            return 0
        if m > n:
            # no partition of n has more than n parts
            return 0
        return self._cells[(i, m, n)]

    def _fill(self, upto):
        a = self.offset
        for n in range(self._filled_to + 1, upto + 1):
            for m in range(1, n + 1):
                v1 = self._get(1, m - 1, n - 2 * m - a) + self._get(2, m, n - 2 * m)
                self._cells[(1, m, n)] = v1
                self._cells[(2, m, n)] = v1 + self._get(2, m - 1, n - 2 * m - a + 1)
        self._filled_to = max(self._filled_to, upto)

    def value(self, i, m, n):
        if i not in (1, 2):
            raise ValueError("i must be 1 or 2")
        if n > self._filled_to and 0 < m <= n:
            self._fill(n)
        return self._get(i, m, n)


def system1() -> CountTable:
    return CountTable("System1", 0)


def system2(k: int) -> CountTable:
    if k < 1:
        raise ValueError("k must be >= 1")
    return CountTable("System2(k=%d)" % k, 2 * k)


def system3(k: int) -> CountTable:
    if k < 1:
        raise ValueError("k must be >= 1")
    return CountTable("System3(k=%d)" % k, 2 * k - 1)


def table_value(t: CountTable, i: int, m: int, n: int) -> int:
    """Value of the table cell (i, m, n); negative indices hit the base cases."""
    return t.value(i, m, n)


def family_count_via_table(t: CountTable, i: int, n: int) -> int:
    """Total count at weight n as the sum of refined counts over lengths."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(t.value(i, m, n) for m in range(0, n + 1))


@dataclass
class VerificationReport:
    """Outcome of one identity sweep: empty violations means verified."""

    system: str
    family: str
    max_n: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "family": self.family,
            "max_n": self.max_n,
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _cell(i, m, n, expected, actual):
    return {"i": i, "m": m, "n": n, "expected": expected, "actual": actual}


def variant_for_min_part(min_part: int) -> CountTable:
    """The recursion system governing a family with the given minimum part."""
    if min_part == 1:
        return system1()
    if min_part % 2 == 1:
        return system2((min_part - 1) // 2)
    return system3(min_part // 2)


def _refined_counts(kind, min_part, max_n):
    # counts[i][n] is a Counter over lengths; one enumeration per (i, n)
    return {
        i: {n: counts_by_length(n, FamilySpec(kind, i, min_part)) for n in range(max_n + 1)}
        for i in (1, 2)
    }


def verify_system(t: CountTable, f: FamilySpec, max_n: int) -> VerificationReport:
    """Check that f's refined oracle counts satisfy t's two equations.

    The equations couple the index values, so both i=1 and i=2 are swept
    regardless of f.i.  The table variant must match f.min_part (System1 for
    minimum part 1, System2(k) for 2k+1, System3(k) for 2k); a mismatch is a
    usage error.  Violated cells carry the equation's right-hand side as
    "expected" and the oracle count as "actual".
    """
    if variant_for_min_part(f.min_part).variant != t.variant:
        raise ValueError(
            "table %s does not govern min_part %d" % (t.variant, f.min_part)
        )
    report = VerificationReport(t.variant, f.label(), max_n)
    counts = _refined_counts(f.kind, f.min_part, max_n)

    def c(i, m, n):
        # out-of-range cells count nothing; in-range cells come from the oracle
        if m < 0 or n < 0 or m > n:
            return 0
        return counts[i][n][m]

    a = t.offset
    for n in range(0, max_n + 1):
        for m in range(0, n + 1):
            if (m, n) == (0, 0):
                for i in (1, 2):
                    if c(i, 0, 0) != 1:
                        report.violations.append(_cell(i, 0, 0, 1, c(i, 0, 0)))
                continue
            rhs1 = c(1, m - 1, n - 2 * m - a) + c(2, m, n - 2 * m)
            if c(1, m, n) != rhs1:
                report.violations.append(_cell(1, m, n, rhs1, c(1, m, n)))
            rhs2 = c(1, m, n) + c(2, m - 1, n - 2 * m - a + 1)
            if c(2, m, n) != rhs2:
                report.violations.append(_cell(2, m, n, rhs2, c(2, m, n)))
    return report


def compare_table_oracle(t: CountTable, f: FamilySpec, max_n: int) -> VerificationReport:
    """Cellwise table against oracle: t(i,m,n) vs refined count of f.

    Same variant-matching rule as verify_system; both index values swept.
    """
    if variant_for_min_part(f.min_part).variant != t.variant:
        raise ValueError(
            "table %s does not govern min_part %d" % (t.variant, f.min_part)
        )
    report = VerificationReport(t.variant + ":cells", f.label(), max_n)
    counts = _refined_counts(f.kind, f.min_part, max_n)
    for n in range(0, max_n + 1):
        for m in range(0, n + 1):
            for i in (1, 2):
                want = t.value(i, m, n)
                got = counts[i][n][m]
                if want != got:
                    report.violations.append(_cell(i, m, n, want, got))
    return report


def shift_identity_check(k: int, i: int, max_n: int) -> VerificationReport:
    """Pointwise checks of the four shift equations for one k and index i.

    For all m <= n <= max_n, using oracle counts (p for kind P, b for kind B):

        p[2k+1](m, n) = p(m, n - 2mk)        b[2k+1](m, n) = b(m, n - 2mk)
        p[2k](m, n)   = p[2k+1](m, n + m)    b[2k](m, n)   = b[2k+1](m, n + m)
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    report = VerificationReport("shift-equations(k=%d)" % k, "P+B(i=%d)" % i, max_n)
    for kind in ("P", "B"):
        base = {n: counts_by_length(n, FamilySpec(kind, i, 1)) for n in range(max_n + 1)}
        odd = {n: counts_by_length(n, FamilySpec(kind, i, 2 * k + 1)) for n in range(max_n + 1)}
        even = {n: counts_by_length(n, FamilySpec(kind, i, 2 * k)) for n in range(max_n + 1)}
        # the right side of the even-shift equation needs odd-shift counts
        # beyond max_n (weight n + m)
        odd_hi = {
            n: counts_by_length(n, FamilySpec(kind, i, 2 * k + 1))
            for n in range(max_n + 1, 2 * max_n + 1)
        }
        odd_all = {**odd, **odd_hi}

        def at(table, m, n):
            # negative weight counts nothing; everything else is oracle data
            if n < 0:
                return 0
            return table[n][m]

        for n in range(0, max_n + 1):
            for m in range(0, n + 1):
                lhs = at(odd, m, n)
                rhs = at(base, m, n - 2 * m * k) if n - 2 * m * k <= max_n else 0
                if lhs != rhs:
                    report.violations.append(_cell(i, m, n, rhs, lhs))
                lhs = at(even, m, n)
                rhs = at(odd_all, m, n + m)
                if lhs != rhs:
                    report.violations.append(_cell(i, m, n, rhs, lhs))
    return report


def refined_AB_witness(i: int, max_n: int):
    """Smallest (n, m) in lexicographic order where the fixed-length counts
    of kinds A and B disagree, as (m, n, countA, countB); None if none occurs
    up to max_n.  The total counts at any weight still agree, so a witness
    shows the identity does not refine by length.
    """
    fa = FamilySpec("A", i)
    fb = FamilySpec("B", i)
    for n in range(0, max_n + 1):
        ca = counts_by_length(n, fa)
        cb = counts_by_length(n, fb)
        for m in range(0, n + 1):
            if ca[m] != cb[m]:
                return (m, n, ca[m], cb[m])
    return None
