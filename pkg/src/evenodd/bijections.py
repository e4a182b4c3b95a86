"""Invertible maps behind the even-odd partition identities.

Each map validates its domain clause by clause, applies an arithmetic
transformation and then checks the image against the claimed codomain (the
check is an executable restatement of the corresponding proof step, never
assumed).  The inverse maps validate and reconstruct exactly.

Weight and length bookkeeping, with m the input length and n its weight:

* p_drop_one / b_drop_one: one part equal to 1 is deleted, 2 is removed from
  the rest; the image lives at (m-1, n-2m+1).
* p_case_map splits the even-odd members with no part 1 three ways, landing
  at (m-1, n-2m) for cases 1 and 2 and at (m, n-2m) for case 3.
* b_case_map splits the gap members with no part 1 two ways, landing at
  (m-1, n-2m) for case 1 and (m, n-2m) for case 2.
* shift_sub_2k drops every part by 2k, weight n-2mk; shift_add_one raises
  every part by 1, weight n+m, swapping part parities.
"""

import bisect

from .partitions import FamilySpec, Partition, enumerate_family, is_member


class BijectionDomainError(ValueError):
    """The input is outside the map's domain; the message names the clause."""


class CodomainError(RuntimeError):
    """An image failed its codomain predicate (would disprove the identity)."""

    def __init__(self, message, image):
        super().__init__(message)
        self.image = image


def _require(cond, clause):
    if not cond:
        raise BijectionDomainError(clause)


def _require_member(p, f):
    _require(is_member(p, f), "not a member of %s" % f.label())


def _check_codomain(image, f, name):
    if not is_member(image, f):
        raise CodomainError("%s image %r is not in %s" % (name, image, f.label()), image)
    return image


def _insert_desc(p: Partition, v: int) -> Partition:
    # keep non-increasing order; bisect works on the ascending reversal
    asc = list(p[::-1])
    bisect.insort(asc, v)
    return tuple(asc[::-1])


_P1 = FamilySpec("P", 1)
_P2 = FamilySpec("P", 2)
_B1 = FamilySpec("B", 1)
_B2 = FamilySpec("B", 2)


def p_drop_one(p: Partition) -> Partition:
    """Delete the single part 1 and remove 2 from every other part."""
    _require_member(p, _P2)
    _require(p.count(1) == 1, "expected exactly one part equal to 1")
    image = tuple(x - 2 for x in p[:-1])
    return _check_codomain(image, _P2, "p_drop_one")


def p_drop_one_inverse(q: Partition) -> Partition:
    """Add 2 to every part, then append a part 1."""
    _require_member(q, _P2)
    image = tuple(x + 2 for x in q) + (1,)
    if image.count(1) != 1 or not is_member(image, _P2):
        raise CodomainError("p_drop_one_inverse image %r invalid" % (image,), image)
    return image


def _p_case_of(p: Partition) -> int:
    m = len(p)
    evens = [x for x in p if x % 2 == 0]
    if evens and evens[-1] == 2 * m:
        return 1
    if p.count(3) >= 2:
        return 2
    return 3


def p_case_map(p: Partition) -> tuple[int, Partition]:
    """Three-way split of the even-odd members without a part 1.

    Case 1 (smallest even part equals twice the length): delete that part.
    Case 2 (two parts equal to 3): delete both, remove 4 from the remaining
    parts, insert a new part 2m-2.  Case 3 (otherwise): remove 2 from every
    part.  Cases 1 and 2 land back in the i=1 family one part shorter; case 3
    lands in the i=2 family at the same length.
    """
    _require_member(p, _P1)
    _require(p, "empty partition is outside the domain")
    m = len(p)
    case = _p_case_of(p)
    if case == 1:
        idx = max(t for t, x in enumerate(p) if x == 2 * m)
        image = p[:idx] + p[idx + 1 :]
        return 1, _check_codomain(image, _P1, "p_case_map[1]")
    if case == 2:
        rest = list(p)
        rest.remove(3)
        rest.remove(3)
        image = _insert_desc(tuple(x - 4 for x in rest), 2 * m - 2)
        return 2, _check_codomain(image, _P1, "p_case_map[2]")
    image = tuple(x - 2 for x in p)
    return 3, _check_codomain(image, _P2, "p_case_map[3]")


def p_case_inverse(case: int, q: Partition, target_m: int) -> Partition:
    """Rebuild the preimage of q under the given case, of length target_m.

    Case 1 inserts a part equal to 2*target_m, so q's even parts, if any,
    must already be at least that big (partitions with no even part do occur
    as case 1 images and are accepted).  Case 2 requires the smallest even
    part of q to equal 2*(target_m - 1); it is deleted, 4 is added to the
    rest and two parts 3 are appended.  Case 3 adds 2 to every part.
    """
    if case not in (1, 2, 3):
        raise ValueError("case must be 1, 2 or 3")
    _require(target_m >= 1, "target length must be at least 1")
    if case == 3:
        _require_member(q, _P2)
        _require(len(q) == target_m, "case 3 needs len(q) == target_m")
        image = tuple(x + 2 for x in q)
        expect_case = 3
    else:
        _require_member(q, _P1)
        _require(len(q) == target_m - 1, "cases 1 and 2 need len(q) == target_m - 1")
        evens = [x for x in q if x % 2 == 0]
        if case == 1:
            _require(
                not evens or evens[-1] >= 2 * target_m,
                "case 1 needs every even part of q to be at least 2*target_m",
            )
            image = _insert_desc(q, 2 * target_m)
            expect_case = 1
        else:
            _require(
                bool(evens) and evens[-1] == 2 * (target_m - 1),
                "case 2 needs smallest even part of q equal to 2*(target_m - 1)",
            )
            rest = list(q)
            rest.remove(2 * (target_m - 1))
            lifted = tuple(x + 4 for x in rest) + (3, 3)
            image = tuple(sorted(lifted, reverse=True))
            expect_case = 2
    if not is_member(image, _P1) or _p_case_of(image) != expect_case:
        raise CodomainError("p_case_inverse[%d] image %r invalid" % (case, image), image)
    return image


def b_drop_one(p: Partition) -> Partition:
    """Delete the single part 1 and remove 2 from every other part."""
    _require_member(p, _B2)
    _require(p.count(1) == 1, "expected exactly one part equal to 1")
    image = tuple(x - 2 for x in p[:-1])
    return _check_codomain(image, _B2, "b_drop_one")


def b_drop_one_inverse(q: Partition) -> Partition:
    """Add 2 to every part, then append a part 1."""
    _require_member(q, _B2)
    image = tuple(x + 2 for x in q) + (1,)
    if image.count(1) != 1 or not is_member(image, _B2):
        raise CodomainError("b_drop_one_inverse image %r invalid" % (image,), image)
    return image


def b_case_map(p: Partition) -> tuple[int, Partition]:
    """Two-way split of the gap members with smallest part at least 2.

    Case 1 (smallest part is 2): delete it and remove 2 from the rest,
    landing one part shorter in the same family.  Case 2 (smallest part at
    least 3): remove 2 from every part, landing in the i=2 family.
    """
    _require_member(p, _B1)
    _require(p, "empty partition is outside the domain")
    if p[-1] == 2:
        image = tuple(x - 2 for x in p[:-1])
        return 1, _check_codomain(image, _B1, "b_case_map[1]")
    image = tuple(x - 2 for x in p)
    return 2, _check_codomain(image, _B2, "b_case_map[2]")


def b_case_inverse(case: int, q: Partition) -> Partition:
    """Add 2 to every part, appending a part 2 for case 1."""
    if case not in (1, 2):
        raise ValueError("case must be 1 or 2")
    if case == 1:
        _require_member(q, _B1)
        image = tuple(x + 2 for x in q) + (2,)
        ok = is_member(image, _B1) and image[-1] == 2
    else:
        _require_member(q, _B2)
        _require(q, "case 2 preimages are nonempty")
        image = tuple(x + 2 for x in q)
        ok = is_member(image, _B1) and image[-1] >= 3
    if not ok:
        raise CodomainError("b_case_inverse[%d] image %r invalid" % (case, image), image)
    return image


def _shift_family(kind: str, i: int, min_part: int) -> FamilySpec:
    if kind not in ("B", "P"):
        raise BijectionDomainError("shift maps apply to kinds B and P only")
    return FamilySpec(kind, i, min_part)


def shift_sub_2k(p: Partition, k: int, kind: str = "P", i: int = 2) -> Partition:
    """Remove 2k from every part: minimum part 2k+1 down to the base family."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_member(p, _shift_family(kind, i, 2 * k + 1))
    image = tuple(x - 2 * k for x in p)
    return _check_codomain(image, FamilySpec(kind, i, 1), "shift_sub_2k")


def shift_sub_2k_inverse(q: Partition, k: int, kind: str = "P", i: int = 2) -> Partition:
    """Add 2k to every part: base family up to minimum part 2k+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_member(q, _shift_family(kind, i, 1))
    image = tuple(x + 2 * k for x in q)
    return _check_codomain(image, FamilySpec(kind, i, 2 * k + 1), "shift_sub_2k_inverse")


def shift_add_one(p: Partition, k: int, kind: str = "P", i: int = 2) -> Partition:
    """Add 1 to every part: minimum part 2k up to 2k+1, swapping parities."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_member(p, _shift_family(kind, i, 2 * k))
    image = tuple(x + 1 for x in p)
    return _check_codomain(image, FamilySpec(kind, i, 2 * k + 1), "shift_add_one")


def shift_add_one_inverse(q: Partition, k: int, kind: str = "P", i: int = 2) -> Partition:
    """Remove 1 from every part: minimum part 2k+1 down to 2k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _require_member(q, _shift_family(kind, i, 2 * k + 1))
    image = tuple(x - 1 for x in q)
    return _check_codomain(image, FamilySpec(kind, i, 2 * k), "shift_add_one_inverse")


BIJECTION_NAMES = (
    "P-drop-one",
    "P-case-even-eq",
    "P-case-two-threes",
    "P-case-generic",
    "B-drop-one",
    "B-case-min2",
    "B-case-min3",
    "shift-sub-2k",
    "shift-add-one",
)

_CASE_BY_NAME = {
    "P-case-even-eq": 1,
    "P-case-two-threes": 2,
    "P-case-generic": 3,
    "B-case-min2": 1,
    "B-case-min3": 2,
}


def bijection_domain(name, n, k=None, kind="P", i=None):
    """Yield the domain members of the named map at weight n.

    The empty partition is never listed (weight 0 traces are empty).  Shift
    maps need k; their kind defaults to P and their index to 2.
    """
    if name not in BIJECTION_NAMES:
        raise ValueError("unknown bijection %r" % (name,))
    if name == "P-drop-one":
        for p in enumerate_family(n, _P2):
            if p.count(1) == 1:
                yield p
    elif name == "B-drop-one":
        for p in enumerate_family(n, _B2):
            if p.count(1) == 1:
                yield p
    elif name.startswith("P-case"):
        want = _CASE_BY_NAME[name]
        for p in enumerate_family(n, _P1):
            if p and _p_case_of(p) == want:
                yield p
    elif name.startswith("B-case"):
        want = _CASE_BY_NAME[name]
        for p in enumerate_family(n, _B1):
            if p and (1 if p[-1] == 2 else 2) == want:
                yield p
    else:
        if k is None:
            raise ValueError("%s needs k" % name)
        idx = 2 if i is None else i
        mp = 2 * k + 1 if name == "shift-sub-2k" else 2 * k
        for p in enumerate_family(n, _shift_family(kind, idx, mp)):
            if p:
                yield p


def apply_bijection(name, p, k=None, kind="P", i=None):
    """Forward map for the named bijection: (case or None, image)."""
    if name == "P-drop-one":
        return None, p_drop_one(p)
    if name == "B-drop-one":
        return None, b_drop_one(p)
    if name.startswith("P-case"):
        case, image = p_case_map(p)
        _require(case == _CASE_BY_NAME[name], "input falls under case %d" % case)
        return case, image
    if name.startswith("B-case"):
        case, image = b_case_map(p)
        _require(case == _CASE_BY_NAME[name], "input falls under case %d" % case)
        return case, image
    idx = 2 if i is None else i
    if name == "shift-sub-2k":
        return None, shift_sub_2k(p, k, kind, idx)
    if name == "shift-add-one":
        return None, shift_add_one(p, k, kind, idx)
    raise ValueError("unknown bijection %r" % (name,))


def invert_bijection(name, case, image, target_m, k=None, kind="P", i=None):
    """Inverse map for the named bijection."""
    if name == "P-drop-one":
        return p_drop_one_inverse(image)
    if name == "B-drop-one":
        return b_drop_one_inverse(image)
    if name.startswith("P-case"):
        return p_case_inverse(case, image, target_m)
    if name.startswith("B-case"):
        return b_case_inverse(case, image)
    idx = 2 if i is None else i
    if name == "shift-sub-2k":
        return shift_sub_2k_inverse(image, k, kind, idx)
    if name == "shift-add-one":
        return shift_add_one_inverse(image, k, kind, idx)
    raise ValueError("unknown bijection %r" % (name,))


class TraceRow:
    """One traced application: pinned wire keys plus a round-trip verdict."""

    def __init__(self, bijection, input_p, case, output, domain_ok, codomain_ok, roundtrip_ok):
        self.bijection = bijection
        self.input = input_p
        self.case = case
        self.output = output
        self.domain_ok = domain_ok
        self.codomain_ok = codomain_ok
        self.roundtrip_ok = roundtrip_ok

    def to_dict(self) -> dict:
        d = {
            "bijection": self.bijection,
            "input": list(self.input),
            "output": list(self.output) if self.output is not None else None,
            "domain_ok": self.domain_ok,
            "codomain_ok": self.codomain_ok,
        }
        if self.case is not None:
            d["case"] = self.case
        return d


def trace_bijection(name, n, k=None, kind="P", i=None):
    """Apply the named map to every domain member at weight n.

    Returns a list of TraceRow.  codomain_ok records the post-check on the
    image; roundtrip_ok records inverse(image) == input.
    """
    rows = []
    for p in bijection_domain(name, n, k=k, kind=kind, i=i):
        case, image, cod_ok = None, None, False
        try:
            case, image = apply_bijection(name, p, k=k, kind=kind, i=i)
            cod_ok = True
        except CodomainError as e:
            image = e.image
        rt_ok = False
        if image is not None and cod_ok:
            try:
                rt_ok = invert_bijection(name, case, image, len(p), k=k, kind=kind, i=i) == p
            except (BijectionDomainError, CodomainError):
                rt_ok = False
        rows.append(TraceRow(name, p, case, image, True, cod_ok, rt_ok))
    return rows
