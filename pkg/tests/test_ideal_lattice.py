"""Two-sided ideal calculus: chains, leaves, and the antichain lattice.

Oracle strategy: the whole lattice of ideals embeds into up-closed families
of subsets of {1..k}.  For k <= 4 we enumerate ALL 2^(2^k) families of
subsets by brute force, keep the up-closed ones, and replay every lattice
operation against that model:

    ideal (intersection form antichain A)  <->  up-closure U(A)
    a contained in b                       <->  U(b) subset of U(a)
    intersect                              <->  union of families
    sum                                    <->  intersection of families

Products are modeled on SUM-form up-closures, where the product of two
ideals is generated by pairwise unions of index sets.
"""

import itertools

from fractions import Fraction

from gieseker import (
    IdealAntichain,
    antichain_normalize,
    contains,
    count_ideals,
    enumerate_ideals,
    enumerate_leaves,
    format_antichain,
    ideal_chain,
    intersect,
    leaf_dimension,
    minimal_transversals,
    parse_antichain,
    product,
    sum_,
    to_intersection_form,
    to_sum_form,
    up_closure,
)

import pytest


UP_CLOSED_COUNTS = [3, 6, 20, 168]  # k = 1..4, recomputed below from scratch
DEDEKIND_K5 = 7581


def brute_force_up_closed_families(k):
    """Every up-closed family of subsets of {1..k}, the slow honest way."""
    universe = [frozenset(c) for size in range(k + 1) for c in itertools.combinations(range(1, k + 1), size)]
    families = []
    for picks in itertools.product((False, True), repeat=len(universe)):
        fam = frozenset(s for s, take in zip(universe, picks) if take)
        if all(t in fam for s in fam for t in universe if t >= s):
            families.append(fam)
    return families


# ---------------------------------------------------------------- counting


def test_counts_match_brute_force():
    for k in range(1, 5):
        families = brute_force_up_closed_families(k)
        assert len(families) == UP_CLOSED_COUNTS[k - 1]
        assert count_ideals(k) == len(families)
        # enumeration is duplicate-free and complete
        ideals = enumerate_ideals(k)
        assert len(ideals) == len(families)
        assert {up_closure(a) for a in ideals} == set(families)


def test_count_k5():
    assert count_ideals(5) == DEDEKIND_K5


# ---------------------------------------------------------------- normalization


def test_normalize_absorbs_supersets():
    a = antichain_normalize([frozenset({1}), frozenset({1, 2})], k=2)
    assert a.to_lists() == [[1]]
    b = antichain_normalize(
        [frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 3}), frozenset({1, 2, 3})],
        k=3,
    )
    assert b.to_lists() == [[1, 2], [1, 3], [2, 3]]


def test_whole_algebra_and_zero_conventions():
    whole = antichain_normalize([], k=2)
    assert whole.to_lists() == []
    zero = antichain_normalize([frozenset()], k=2)
    assert zero.to_lists() == [[]]
    assert len(up_closure(zero)) == 4  # every subset of {1,2}
    assert up_closure(whole) == frozenset()
    # zero is contained in everything, everything is contained in whole
    for other in enumerate_ideals(2):
        assert contains(zero, other)
        assert contains(other, whole)


def test_empty_set_member_must_be_alone():
    with pytest.raises(ValueError):
        IdealAntichain(2, frozenset({frozenset(), frozenset({1})}), "intersection")
    with pytest.raises(ValueError):
        IdealAntichain(2, frozenset({frozenset({3})}), "intersection")


# ---------------------------------------------------------------- lattice ops vs model


def _model_pairs(k):
    ideals = enumerate_ideals(k)
    return [(a, b) for a in ideals for b in ideals]


def test_containment_matches_model():
    for k in (1, 2, 3, 4):
        for a, b in _model_pairs(k):
            # a <= b iff b's family sits inside a's (smaller ideal, larger family)
            assert contains(a, b) == (up_closure(b) <= up_closure(a)), (a, b)


def test_intersect_is_union_of_families():
    for k in (1, 2, 3):
        for a, b in _model_pairs(k):
            got = intersect(a, b)
            assert up_closure(got) == up_closure(a) | up_closure(b)


def test_sum_is_intersection_of_families():
    for k in (1, 2, 3):
        for a, b in _model_pairs(k):
            got = sum_(a, b)
            assert up_closure(got) == up_closure(a) & up_closure(b)


def test_product_equals_intersect_and_pairwise_union_model():
    for k in (1, 2, 3):
        for a, b in _model_pairs(k):
            got = product(a, b)
            assert got == intersect(a, b)
            # sum-form model: product generated by pairwise unions
            ua = up_closure(to_sum_form(a))
            ub = up_closure(to_sum_form(b))
            pairwise = {s | t for s in ua for t in ub}
            assert up_closure(to_sum_form(got)) == pairwise
            assert pairwise == ua & ub


def test_product_idempotent():
    for k in (1, 2, 3, 4):
        for a in enumerate_ideals(k):
            assert product(a, a) == a


def test_lattice_ops_bounded_by_containment():
    for a, b in _model_pairs(3):
        meet = intersect(a, b)
        join = sum_(a, b)
        assert contains(meet, a) and contains(meet, b)
        assert contains(a, join) and contains(b, join)


# ---------------------------------------------------------------- form conversion


def test_sum_form_examples():
    a = antichain_normalize([frozenset({1}), frozenset({2})], k=2)
    assert to_sum_form(a).to_lists() == [[1, 2]]
    b = antichain_normalize([frozenset({1, 2})], k=2)
    assert to_sum_form(b).to_lists() == [[1], [2]]
    c = antichain_normalize([frozenset({1}), frozenset({2}), frozenset({3})], k=3)
    assert to_sum_form(c).to_lists() == [[1, 2, 3]]


def test_form_round_trip_everywhere():
    for k in (1, 2, 3, 4):
        for a in enumerate_ideals(k):
            assert to_intersection_form(to_sum_form(a)) == a


def test_minimal_transversals_is_an_involution_on_antichains():
    for k in (1, 2, 3):
        for a in enumerate_ideals(k):
            once = minimal_transversals(a.members)
            twice = minimal_transversals(once)
            assert twice == a.members


# ---------------------------------------------------------------- text io


def test_parse_format_round_trip():
    a = parse_antichain("[[1], [2, 3]]", k=3)
    assert a.to_lists() == [[1], [2, 3]]
    assert format_antichain(a) == "[[1], [2, 3]]"
    assert parse_antichain("[]", k=2).to_lists() == []
    assert parse_antichain("[[]]", k=2).to_lists() == [[]]


def test_parse_rejects_garbage():
    for bad in ("[[0]]", "[[4]]", "[1,2]", "{", '["x"]'):
        with pytest.raises(ValueError):
            parse_antichain(bad, k=3)


# ---------------------------------------------------------------- leaves


def test_enumerate_leaves_examples():
    assert enumerate_leaves(2, 2) == [(), (1,), (2,), (1, 1)]
    assert enumerate_leaves(1, 2) == [(), (1,)]
    assert enumerate_leaves(3, 2) == [(), (1,), (2,), (3,), (1, 1), (2, 1), (1, 1, 1)]


def test_leaf_dimensions():
    assert leaf_dimension((), 2, 2) == 6
    assert leaf_dimension((1,), 2, 2) == 4
    assert leaf_dimension((1, 1), 2, 2) == 2
    assert leaf_dimension((), 2, 2, reduced=False) == 8
    with pytest.raises(ValueError):
        leaf_dimension((2, 2), 3, 2)  # parts sum past n


def test_leaf_dimension_monotone():
    # adding a part strictly cuts dimension (each slice has positive codim for r >= 2)
    for r in (2, 3):
        for n in (2, 3, 4):
            for leaf in enumerate_leaves(n, r):
                d = leaf_dimension(leaf, n, r)
                for extra in range(1, n - sum(leaf) + 1):
                    assert leaf_dimension(tuple(sorted(leaf + (extra,), reverse=True)), n, r) < d


# ---------------------------------------------------------------- chains


def test_chain_5_2_half():
    ch = ideal_chain(5, 2, Fraction(1, 2))
    assert not ch.simple
    assert ch.denominator == 2
    assert [e.leaf for e in ch.entries] == [(2,), (2, 2)]
    assert [e.variety_dim for e in ch.entries] == [12, 6]
    assert [e.index for e in ch.entries] == [1, 2]


def test_chain_singular_is_simple():
    ch = ideal_chain(3, 2, Fraction(-1, 2))
    assert ch.simple and ch.entries == ()


def test_chain_large_denominator_is_simple():
    ch = ideal_chain(3, 2, Fraction(1, 5))
    assert ch.simple and ch.entries == ()
    assert ch.denominator == 5


def test_chain_rank_one_has_no_variety_dims():
    ch = ideal_chain(4, 1, Fraction(1, 2))
    assert [e.variety_dim for e in ch.entries] == [None, None]


def test_chain_lengths_lambda_one_over_m():
    for n in range(1, 11):
        for m in range(1, n + 1):
            ch = ideal_chain(n, 2, Fraction(1, m))
            assert len(ch.entries) == n // m, (n, m)


def test_chain_variety_dims_strictly_decreasing_positive():
    for n in range(2, 9):
        for m in range(2, n + 1):
            ch = ideal_chain(n, 3, Fraction(1, m))
            dims = [e.variety_dim for e in ch.entries]
            assert dims == sorted(dims, reverse=True)
            assert len(set(dims)) == len(dims)
            for i, e in enumerate(ch.entries, start=1):
                if i < n / m:
                    assert e.variety_dim > 0
