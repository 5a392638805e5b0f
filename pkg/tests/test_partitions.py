import pytest
from hypothesis import given, strategies as st

from superinv.partitions import (NotTypical, Partition, TypicalSplit, add_one_box,
                                 conjugate, contains, enumerate_hook, format_partition,
                                 hook_lengths_dimension, is_in_hook, is_large, is_typical,
                                 join_typical, parse_partition, partitions, remove_one_box,
                                 split_typical, subpartitions)

from oracles import count_standard_tableaux

P = Partition

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


@st.composite
def partitions_st(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    return draw(st.sampled_from(partitions(n)))


def test_partition_canonical_form():
    assert P((3, 1, 0, 0)) == (3, 1)
    assert P(()) == ()
    assert P((2, 2)).size == 4
    assert P((3, 1)).part(2) == 1 and P((3, 1)).part(5) == 0
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, -1))


def test_parse_and_format():
    assert parse_partition("4,4,4,4,4") == (4, 4, 4, 4, 4)
    assert parse_partition("") == ()
    assert parse_partition("-") == ()
    assert format_partition(P(())) == ""
    for bad in ("2,x", "1,,2", "0", "1,2", "-1"):
        with pytest.raises(ValueError):
            parse_partition(bad)


@given(partitions_st())
def test_text_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam


@pytest.mark.parametrize("lam, want", [((3, 1), (2, 1, 1)), ((), ()), ((2, 2), (2, 2))])
def test_conjugate_examples(lam, want):
    assert conjugate(lam) == want


def test_partition_counts():
    assert [len(partitions(n)) for n in range(13)] == PARTITION_COUNTS


def test_conjugate_is_an_involution_up_to_12():
    for n in range(13):
        for lam in partitions(n):
            assert conjugate(conjugate(lam)) == lam


@pytest.mark.parametrize("lam, h, want", [
    ((4, 1, 1), (1, 1), True),
    ((2, 2), (1, 1), False),
    ((5, 4, 1, 1, 1), (2, 1), True),
])
def test_is_in_hook_examples(lam, h, want):
    assert is_in_hook(lam, h) is want


def test_hook_membership_transposes():
    for n in range(13):
        for lam in partitions(n):
            for k in range(3):
                for ell in range(3):
                    assert is_in_hook(lam, (k, ell)) == is_in_hook(conjugate(lam), (ell, k))


def test_enumerate_hook_examples():
    assert enumerate_hook((1, 1), 3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(enumerate_hook((1, 1), 4)) == 4
    assert enumerate_hook((2, 2), 2) == [(2,), (1, 1)]
    assert enumerate_hook((0, 0), 0) == [()]
    assert enumerate_hook((0, 0), 3) == []


def test_enumerate_hook_matches_filtering():
    for n in range(13):
        for h in ((1, 1), (2, 1), (1, 2), (2, 2), (3, 0), (0, 2), (5, 4)):
            want = [lam for lam in partitions(n) if is_in_hook(lam, h)]
            assert enumerate_hook(h, n) == want


def test_single_hooks_count_n():
    for n in range(1, 15):
        assert len(enumerate_hook((1, 1), n)) == n


@pytest.mark.parametrize("lam, a, b, want", [
    ((2, 2), 2, 2, True), ((3,), 1, 1, True), ((4, 4, 4, 4), 5, 4, False),
    ((), 0, 3, True), ((2, 1), 2, 2, False), ((3, 3, 1), 2, 1, True),
])
def test_is_typical_examples(lam, a, b, want):
    assert is_typical(lam, a, b) is want


@pytest.mark.parametrize("lam, a, b, alpha, beta", [
    ((3, 1, 1), 1, 1, (2,), (2,)),
    ((4, 4, 4, 4, 4), 5, 4, (), ()),
    ((5, 4, 4, 4, 4), 5, 4, (1,), ()),
    ((4, 4, 4, 4, 4, 1), 5, 4, (), (1,)),
])
def test_split_and_join_examples(lam, a, b, alpha, beta):
    s = split_typical(lam, a, b)
    assert (s.alpha, s.beta) == (alpha, beta)
    assert join_typical(TypicalSplit(P(alpha), P(beta), a, b)) == lam


def test_split_rejects_non_typical():
    with pytest.raises(NotTypical):
        split_typical((4, 4, 4, 4), 5, 4)


def test_join_rejects_too_many_parts():
    with pytest.raises(ValueError):
        join_typical(TypicalSplit(P((1, 1)), P(()), 1, 1))


def test_typical_split_is_a_bijection_up_to_12():
    for a in range(4):
        for b in range(4):
            typical = {lam for n in range(13) for lam in partitions(n) if is_typical(lam, a, b)}
            images = set()
            for lam in typical:
                s = split_typical(lam, a, b)
                assert len(s.alpha) <= a and len(s.beta) <= b
                assert join_typical(s) == lam
                images.add((s.alpha, s.beta))
            assert len(images) == len(typical)
            # every pair of small enough size comes from some typical lam
            for n_alpha in range(13):
                for alpha in enumerate_hook((a, 0), n_alpha):
                    for n_beta in range(13 - n_alpha - a * b):
                        for beta in enumerate_hook((b, 0), n_beta):
                            assert (alpha, beta) in images


@pytest.mark.parametrize("lam, h, want", [
    ((1, 1), (1, 1), True), ((3,), (1, 1), False), ((4, 4, 4, 4, 4), (2, 1), True),
    ((), (1, 1), False), ((2,), (1, 0), True), ((), (1, 0), False), ((1, 1), (1, 0), False),
])
def test_is_large_examples(lam, h, want):
    assert is_large(lam, h) is want


@pytest.mark.parametrize("h, bound", [((1, 1), 24), ((2, 1), 22)])
def test_typical_partitions_of_the_support_hook_are_large(h, bound):
    k, ell = h
    K, L = k * k + ell * ell, 2 * k * ell
    count = 0
    for n in range(K * L, bound + 1):
        for lam in enumerate_hook((K, L), n):
            if is_typical(lam, K, L):
                count += 1
                assert is_large(lam, h)
    assert count > 0


@pytest.mark.parametrize("lam, want", [
    ((1,), [(2,), (1, 1)]), ((), [(1,)]), ((2, 1), [(3, 1), (2, 2), (2, 1, 1)]),
])
def test_add_one_box_examples(lam, want):
    assert add_one_box(lam) == want


@given(partitions_st())
def test_add_one_box_count_and_inverse(lam):
    ups = add_one_box(lam)
    assert len(ups) == len(set(lam)) + 1
    for up in ups:
        assert up.size == sum(lam) + 1
        assert P(lam) in remove_one_box(up)
    for down in remove_one_box(lam):
        assert P(lam) in add_one_box(down)


def test_contains_and_subpartitions():
    assert contains((3, 2), (2, 2)) and not contains((3, 2), (2, 2, 1))
    subs = list(subpartitions((2, 1)))
    assert sorted(subs) == sorted([(), (1,), (2,), (1, 1), (2, 1)])
    assert set(subpartitions((3, 2), max_len=1)) == {P(()), P((1,)), P((2,)), P((3,))}
    assert set(subpartitions((3, 2), min_parts=(2, 1))) == {P((2, 1)), P((3, 1)), P((2, 2)), P((3, 2))}


@given(partitions_st(max_n=8))
def test_subpartitions_match_filter(lam):
    want = {mu for n in range(sum(lam) + 1) for mu in partitions(n) if contains(lam, mu)}
    assert set(subpartitions(lam)) == want


@given(partitions_st(max_n=10))
def test_hook_length_formula_counts_standard_tableaux(lam):
    assert hook_lengths_dimension(lam) == count_standard_tableaux(lam)
