"""Truncated formal power series over exact integers.

Used to realize the product side of the partition identities: the generating
function of partitions into an allowed set of part sizes is the product of
geometric factors 1/(1-q^j) over allowed j, truncated at the working degree.
Coefficients are plain Python ints, so they never overflow or round.
"""

from typing import Callable, NamedTuple

from .partitions import FamilySpec, count_family, part_allowed_for_A


class TruncatedSeries:
    """Coefficients c[0..N] of a power series in q, truncated at degree N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(int(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the degree-0 coefficient")
        self.coeffs = cs

    @property
    def truncation_degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return "TruncatedSeries([%s%s])" % (head, tail)

    @classmethod
    def zero(cls, degree: int) -> "TruncatedSeries":
        return cls([0] * (degree + 1))

    @classmethod
    def one(cls, degree: int) -> "TruncatedSeries":
        return cls([1] + [0] * degree)

    @classmethod
    def geometric(cls, j: int, degree: int) -> "TruncatedSeries":
        """1/(1-q^j): coefficient 1 at every multiple of j."""
        if j < 1:
            raise ValueError("j must be >= 1")
        return cls([1 if n % j == 0 else 0 for n in range(degree + 1)])

    def __add__(self, other):
        _same_degree(self, other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        return series_mul(self, other)

    def to_decimal_strings(self) -> list:
        """JSON-friendly export: decimal strings indexed by degree."""
        return [str(c) for c in self.coeffs]


def _same_degree(a: TruncatedSeries, b: TruncatedSeries):
    if a.truncation_degree != b.truncation_degree:
        raise ValueError(
            "truncation degrees differ: %d vs %d"
            % (a.truncation_degree, b.truncation_degree)
        )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the shared degree."""
    _same_degree(a, b)
    n = a.truncation_degree
    out = [0] * (n + 1)
    for d, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for e in range(0, n - d + 1):
            cb = b.coeffs[e]
            if cb:
                out[d + e] += ca * cb
    return TruncatedSeries(out)


def restricted_parts_product(allowed: Callable[[int], bool], degree: int) -> TruncatedSeries:
    """Product of 1/(1-q^j) over allowed part sizes j <= degree.

    The coefficient of q^n counts partitions of n into allowed parts.  Each
    geometric factor is folded in as an in-place stride-j prefix sum, which
    is the same Cauchy product with the zero terms skipped.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    c = [0] * (degree + 1)
    c[0] = 1
    for j in range(1, degree + 1):
        if not allowed(j):
            continue
        for t in range(j, degree + 1):
            c[t] += c[t - j]
    return TruncatedSeries(c)


def product_for_A(i: int, degree: int) -> TruncatedSeries:
    """Generating function of the residue-restricted family with index i."""
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    return restricted_parts_product(lambda j: part_allowed_for_A(j, i), degree)


def series_from_counts(f: FamilySpec, degree: int) -> TruncatedSeries:
    """Series whose coefficient of q^n is the enumerated count of f at n."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    return TruncatedSeries([count_family(n, f) for n in range(degree + 1)])


class SeriesComparison(NamedTuple):
    equal: bool
    degree: int
    left: int
    right: int


def series_equal_upto(a: TruncatedSeries, b: TruncatedSeries) -> SeriesComparison:
    """Coefficientwise comparison; on mismatch reports the least degree and
    both values there.  Equal series report degree -1.
    """
    _same_degree(a, b)
    for n, (ca, cb) in enumerate(zip(a.coeffs, b.coeffs)):
        if ca != cb:
            return SeriesComparison(False, n, ca, cb)
    return SeriesComparison(True, -1, 0, 0)
