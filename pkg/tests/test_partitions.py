"""Partition combinatorics: enumeration, transpose, division with remainder, hooks.

The division oracle below is deliberately brute force: it enumerates every
candidate quotient bounded componentwise by floor(lam_i / m) and keeps the
valid decompositions.  Correctness of divide_with_remainder is *defined* by
maximality of |quotient| over that search space, so the fast implementation
is checked against the dumb one, never the other way round.
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gieseker import (
    count_multipartitions,
    count_partitions,
    divide_with_remainder,
    enumerate_compositions,
    enumerate_multipartitions,
    enumerate_partitions,
    format_multipartition,
    format_partition,
    hooks,
    is_partition,
    multipartition_size,
    parse_multipartition,
    parse_partition,
    quotient_size,
    removable_corners,
    remove_corner,
    size,
    transpose,
)


# ---------------------------------------------------------------- oracles


def brute_force_divisions(lam, m):
    """All (quotient, remainder) pairs with m*q + rem == lam, both partitions."""
    padded = tuple(lam)
    out = []
    ranges = [range(part // m + 1) for part in padded]
    def weakly_decreasing(seq):
        return all(a >= b for a, b in zip(seq, seq[1:]))

    for q in itertools.product(*ranges):
        rem = tuple(part - m * qi for part, qi in zip(padded, q))
        # the padded tuples themselves must be partitions-with-trailing-zeros;
        # an internal zero before a nonzero entry is not reparable by stripping
        if weakly_decreasing(q) and weakly_decreasing(rem):
            strip = lambda p: tuple(x for x in p if x)
            out.append((strip(q), strip(rem)))
    return out


def dp_multipartition_counts(max_n, r):
    """Coefficients of prod_j (1-t^j)^(-r) up to t^max_n, by repeated convolution."""
    coeffs = [1] + [0] * max_n
    for _ in range(r):
        for j in range(1, max_n + 1):
            for k in range(j, max_n + 1):
                coeffs[k] += coeffs[k - j]
    return coeffs


# ---------------------------------------------------------------- enumeration


def test_enumerate_partitions_small():
    assert enumerate_partitions(0) == ((),)
    assert enumerate_partitions(2) == ((2,), (1, 1))
    assert len(enumerate_partitions(8)) == 22


def test_enumeration_order_is_lex_descending():
    for n in range(9):
        parts = enumerate_partitions(n)
        assert list(parts) == sorted(parts, reverse=True)
        assert len(set(parts)) == len(parts)


def test_enumerate_multipartitions_2_2():
    assert enumerate_multipartitions(2, 2) == (
        ((2,), ()),
        ((1, 1), ()),
        ((1,), (1,)),
        ((), (2,)),
        ((), (1, 1)),
    )


def test_enumerate_multipartitions_edges():
    assert enumerate_multipartitions(0, 3) == (((), (), ()),)
    for r in (1, 2, 5):
        assert len(enumerate_multipartitions(1, r)) == r


def test_multipartition_counts_against_dp():
    for r in range(1, 5):
        coeffs = dp_multipartition_counts(20, r)
        for n in range(21):
            assert count_multipartitions(n, r) == coeffs[n], (n, r)


def test_count_partitions_matches_enumeration():
    for n in range(13):
        assert count_partitions(n) == len(enumerate_partitions(n))


def test_enumerate_compositions():
    comps = enumerate_compositions(2, 2)
    assert set(comps) == {(2, 0), (1, 1), (0, 2)}
    assert all(sum(c) == 5 for c in enumerate_compositions(5, 3))
    assert len(enumerate_compositions(5, 3)) == 21  # C(7,2)


# ---------------------------------------------------------------- transpose


@pytest.mark.parametrize(
    "lam,expected",
    [((2,), (1, 1)), ((), ()), ((3, 1), (2, 1, 1)), ((5,), (1, 1, 1, 1, 1))],
)
def test_transpose_examples(lam, expected):
    assert transpose(lam) == expected


def test_transpose_involution_exhaustive():
    for n in range(13):
        for lam in enumerate_partitions(n):
            assert transpose(transpose(lam)) == lam


@given(st.integers(min_value=0, max_value=30))
def test_transpose_preserves_size(n):
    for lam in enumerate_partitions(min(n, 12)):
        assert size(transpose(lam)) == size(lam)


# ---------------------------------------------------------------- division


def test_divide_documented_examples():
    assert divide_with_remainder((8, 6, 1), 3) == ((1, 1), (5, 3, 1))
    assert divide_with_remainder((2, 1), 2) == ((), (2, 1))
    assert divide_with_remainder((4,), 2) == ((2,), ())


def test_divide_rejects_small_modulus():
    with pytest.raises(ValueError):
        divide_with_remainder((3, 1), 1)
    with pytest.raises(ValueError):
        divide_with_remainder((3, 1), 0)


def test_divide_against_brute_force():
    # every partition of every size up to 12, every modulus in {2,3,4}
    for total in range(13):
        for lam in enumerate_partitions(total):
            for m in (2, 3, 4):
                q, rem = divide_with_remainder(lam, m)
                candidates = brute_force_divisions(lam, m)
                assert (q, rem) in candidates, (lam, m, q, rem)
                best = max(size(c[0]) for c in candidates)
                assert size(q) == best, (lam, m)


def test_divide_reconstructs():
    for lam in enumerate_partitions(11):
        for m in (2, 3):
            q, rem = divide_with_remainder(lam, m)
            width = max(len(lam), len(q), len(rem))

            def pad(p):
                return tuple(p) + (0,) * (width - len(p))

            rebuilt = tuple(m * a + b for a, b in zip(pad(q), pad(rem)))
            assert tuple(x for x in rebuilt if x) == lam


def test_quotient_size():
    assert quotient_size((8, 6, 1), 3) == 2
    assert quotient_size((4,), 2) == 2
    assert quotient_size((), 5) == 0
    # summing per component gives the multipartition version used downstream
    assert sum(quotient_size(c, 3) for c in ((8, 6, 1), (2, 1))) == 2


# ---------------------------------------------------------------- corners


def test_removable_corners_rows():
    # corners are identified by 0-based row index
    assert removable_corners((3, 3, 1)) == [1, 2]
    assert removable_corners(()) == []
    assert remove_corner((3, 3, 1), 2) == (3, 3)
    assert remove_corner((3, 3, 1), 1) == (3, 2, 1)
    with pytest.raises(ValueError):
        remove_corner((3, 3, 1), 0)


def test_remove_corner_keeps_partition():
    for n in range(1, 11):
        for lam in enumerate_partitions(n):
            for corner in removable_corners(lam):
                smaller = remove_corner(lam, corner)
                assert is_partition(smaller)
                assert size(smaller) == n - 1


# ---------------------------------------------------------------- hooks


def test_hooks_rank_one():
    hs = hooks(2, 1)
    assert [h.shape for h in hs] == [(1, 1), (2,)]
    assert hs[0].multipartition() == ((1, 1),)


def test_hooks_two_slots_single_box():
    hs = hooks(1, 2)
    assert [h.multipartition() for h in hs] == [((1,), ()), ((), (1,))]


def test_hooks_order_2_2():
    hs = hooks(2, 2)
    assert [(h.slot, h.leg) for h in hs] == [(1, 2), (1, 1), (2, 2), (2, 1)]
    assert [h.shape for h in hs] == [(1, 1), (2,), (1, 1), (2,)]
    assert len(hs) == 4


def test_hooks_count_and_distinctness():
    for n in range(1, 6):
        for r in range(1, 4):
            hs = hooks(n, r)
            assert len(hs) == n * r
            assert len({h.multipartition() for h in hs}) == n * r
            for h in hs:
                assert multipartition_size(h.multipartition()) == n


# ---------------------------------------------------------------- text format


@pytest.mark.parametrize("text", ["8,6,1", "-", "4", "2,2,1"])
def test_partition_text_round_trip(text):
    assert format_partition(parse_partition(text)) == text


def test_multipartition_text_round_trip():
    mp = parse_multipartition("8,6,1|2|-")
    assert mp == ((8, 6, 1), (2,), ())
    assert format_multipartition(mp) == "8,6,1|2|-"


def test_parse_multipartition_r_mismatch():
    with pytest.raises(ValueError):
        parse_multipartition("1|2", r=3)


def test_parse_partition_rejects_increasing():
    with pytest.raises(ValueError):
        parse_partition("1,2")


@given(st.integers(min_value=0, max_value=10))
def test_format_parse_round_trip_enumerated(n):
    for lam in enumerate_partitions(n):
        assert parse_partition(format_partition(lam)) == lam
