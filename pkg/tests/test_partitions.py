import itertools

import pytest

from evenodd.partitions import (
    FamilySpec,
    as_partition,
    count_family,
    counts_by_length,
    enumerate_family,
    enumerate_partitions,
    is_member,
    parity_split,
)


def test_as_partition_accepts_canonical():
    assert as_partition([5, 1]) == (5, 1)
    assert as_partition(()) == ()
    assert as_partition((3, 3, 3)) == (3, 3, 3)


@pytest.mark.parametrize("bad", [[1, 2], [0], [3, -1], [2.5], [True]])
def test_as_partition_rejects(bad):
    with pytest.raises(ValueError):
        as_partition(bad)


def test_parity_split_examples():
    s = parity_split((5, 1))
    assert s.evens == () and s.odds == (5, 1)
    assert (s.r1, s.r2) == (0, 2)
    s = parity_split(())
    assert s.evens == () and s.odds == ()
    s = parity_split((10, 3, 3))
    assert s.evens == (10,) and s.odds == (3, 3)
    assert (s.r1, s.r2) == (1, 2)


def test_parity_split_recovers_source():
    for n in range(0, 15):
        for p in enumerate_partitions(n):
            s = parity_split(p)
            assert sorted(s.evens + s.odds, reverse=True) == list(p)
            assert s.r1 + s.r2 == len(p)


def test_family_spec_validation():
    FamilySpec("P", 2, 1)
    FamilySpec("B", 1, 7)
    with pytest.raises(ValueError):
        FamilySpec("Q", 2, 1)
    with pytest.raises(ValueError):
        FamilySpec("P", 3, 1)
    with pytest.raises(ValueError):
        FamilySpec("B", 2, 0)
    with pytest.raises(ValueError):
        FamilySpec("A", 2, 3)


def test_family_spec_round_trip():
    f = FamilySpec("P", 1, 5)
    assert FamilySpec.from_dict(f.to_dict()) == f
    assert f.to_dict() == {"kind": "P", "i": 1, "min_part": 5}


@pytest.mark.parametrize(
    "p,f,expect",
    [
        ((3, 3), FamilySpec("P", 2), True),
        ((4, 2), FamilySpec("P", 2), False),  # smallest even 2 < 2*length
        ((4, 2), FamilySpec("B", 2), True),
        ((1, 1, 1, 1, 1, 1), FamilySpec("A", 2), True),
        ((), FamilySpec("A", 1), True),
        ((), FamilySpec("P", 1, 4), True),
        ((), FamilySpec("B", 2, 3), True),
        ((10, 3, 3), FamilySpec("P", 1), True),
        ((3, 3, 3), FamilySpec("P", 2), False),  # odd parts two apart differ by 0
        ((7, 3, 3), FamilySpec("P", 2), True),  # 7-3 = 4, allowed
        ((5, 1), FamilySpec("P", 2), True),
        ((5, 1), FamilySpec("P", 1), False),  # one part equal to 1
        ((5, 3, 1), FamilySpec("P", 2), True),  # 5-1 = 4
        ((5, 1), FamilySpec("B", 2), True),
        ((2, 1), FamilySpec("B", 2), False),  # gap 1
        ((6, 4), FamilySpec("P", 1), True),  # smallest even 4 = 2*2
        ((8, 6), FamilySpec("P", 2), True),  # smallest even 6 >= 2*2
        ((6, 2), FamilySpec("P", 2), False),  # smallest even 2 < 2*2
    ],
)
def test_is_member_base_families(p, f, expect):
    assert is_member(p, f) is expect


def test_is_member_shifted_families():
    # minimum part 3 (odd shift, k=1): every part >= 3, smallest even >= 2(m+1)
    assert is_member((5,), FamilySpec("P", 2, 3)) is True
    assert is_member((5,), FamilySpec("P", 1, 3)) is True
    assert is_member((3,), FamilySpec("P", 1, 3)) is False  # part equal to min
    assert is_member((3,), FamilySpec("P", 2, 3)) is True
    assert is_member((4,), FamilySpec("P", 2, 3)) is True  # even 4 >= 2(1+1)
    assert is_member((4, 3), FamilySpec("P", 2, 3)) is False  # even 4 < 2(2+1)
    # minimum part 2 (even shift, k=1): smallest odd + 1 >= 2(m+1)
    assert is_member((4, 2), FamilySpec("P", 2, 2)) is True
    assert is_member((3, 2), FamilySpec("P", 2, 2)) is False  # odd 3+1 < 2(2+1)
    assert is_member((5, 2), FamilySpec("P", 2, 2)) is True  # 5+1 >= 6
    assert is_member((2,), FamilySpec("P", 1, 2)) is False
    # B shifts
    assert is_member((6, 3), FamilySpec("B", 1, 3)) is False  # part equal to 3
    assert is_member((6, 3), FamilySpec("B", 2, 3)) is True
    assert is_member((6, 4), FamilySpec("B", 2, 4)) is True
    assert is_member((7, 4), FamilySpec("B", 2, 3)) is True
    assert is_member((7, 2), FamilySpec("B", 2, 3)) is False  # part below minimum


def test_enumerate_partitions_of_six():
    got = list(enumerate_partitions(6))
    assert got == [
        (6,),
        (5, 1),
        (4, 2),
        (4, 1, 1),
        (3, 3),
        (3, 2, 1),
        (3, 1, 1, 1),
        (2, 2, 2),
        (2, 2, 1, 1),
        (2, 1, 1, 1, 1),
        (1, 1, 1, 1, 1, 1),
    ]
    assert len(got) == 11


def test_enumerate_partitions_edges():
    assert list(enumerate_partitions(0)) == [()]
    assert list(enumerate_partitions(0, fixed_length=1)) == []
    assert list(enumerate_partitions(0, fixed_length=0)) == [()]
    assert list(enumerate_partitions(6, fixed_length=2)) == [(5, 1), (4, 2), (3, 3)]
    assert list(enumerate_partitions(5, min_part=2)) == [(5,), (3, 2)]
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


GOLDEN_SIX = {
    ("P", 2): [(6,), (5, 1), (3, 3)],
    ("B", 2): [(6,), (5, 1), (4, 2)],
    ("A", 2): [(6,), (4, 1, 1), (1, 1, 1, 1, 1, 1)],
    ("P", 1): [(6,), (3, 3)],
    ("B", 1): [(6,), (4, 2)],
    ("A", 1): [(3, 3), (2, 2, 2)],
}


@pytest.mark.parametrize("kind,i", sorted(GOLDEN_SIX))
def test_family_members_of_six(kind, i):
    assert list(enumerate_family(6, FamilySpec(kind, i))) == GOLDEN_SIX[(kind, i)]
    assert count_family(6, FamilySpec(kind, i)) == len(GOLDEN_SIX[(kind, i)])


def test_family_edges():
    for kind in ("A", "B", "P"):
        assert list(enumerate_family(0, FamilySpec(kind, 1))) == [()]
        assert count_family(0, FamilySpec(kind, 2)) == 1
    # (1) has a part equal to 1, forbidden when i=1
    assert list(enumerate_family(1, FamilySpec("P", 1))) == []
    assert list(enumerate_family(1, FamilySpec("B", 1))) == []
    assert list(enumerate_family(5, FamilySpec("P", 2, 3))) == [(5,)]


def test_enumerate_family_matches_filtered_oracle():
    specs = [
        FamilySpec(kind, i, j)
        for kind in ("B", "P")
        for i in (1, 2)
        for j in (1, 2, 3, 4, 5)
    ] + [FamilySpec("A", i) for i in (1, 2)]
    for n in range(0, 22):
        everything = list(enumerate_partitions(n))
        for f in specs:
            ref = [p for p in everything if is_member(p, f)]
            got = list(enumerate_family(n, f))
            assert got == ref, (n, f)


def test_enumerate_family_fixed_length_consistent():
    for n in range(0, 18):
        for f in (FamilySpec("P", 1), FamilySpec("P", 2, 2), FamilySpec("B", 2)):
            whole = list(enumerate_family(n, f))
            for m in range(0, n + 1):
                got = list(enumerate_family(n, f, fixed_length=m))
                assert got == [p for p in whole if len(p) == m]


def test_count_family_refined():
    assert count_family(6, FamilySpec("P", 2), fixed_length=2) == 2
    assert count_family(6, FamilySpec("B", 2), fixed_length=2) == 2
    assert count_family(6, FamilySpec("A", 2), fixed_length=2) == 0


def test_counts_by_length_matches_count_family():
    for n in range(0, 16):
        for f in (FamilySpec("P", 1), FamilySpec("B", 2), FamilySpec("A", 2)):
            c = counts_by_length(n, f)
            for m in range(0, n + 1):
                assert c[m] == count_family(n, f, fixed_length=m)


def test_i_monotonicity():
    # at most 0 parts equal to min implies at most 1, so i=1 members embed in i=2
    for n in range(0, 20):
        for kind in ("A", "B", "P"):
            for j in (1,) if kind == "A" else (1, 2, 3):
                lo = count_family(n, FamilySpec(kind, 1, j))
                hi = count_family(n, FamilySpec(kind, 2, j))
                assert lo <= hi


def test_main_identity_small():
    for n in range(0, 31):
        for i in (1, 2):
            assert count_family(n, FamilySpec("P", i)) == count_family(n, FamilySpec("B", i))


def test_b_enumerator_streams_large_n():
    stream = enumerate_family(300, FamilySpec("B", 2))
    head = list(itertools.islice(stream, 25))
    assert head[0] == (300,)
    assert head[1] == (299, 1)
    assert all(is_member(p, FamilySpec("B", 2)) for p in head)
