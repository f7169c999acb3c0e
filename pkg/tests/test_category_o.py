"""Highest weight category invariants: Betti generating functions, supports,
annihilators, semisimplicity, block structure.

The closed support formula is replayed against an independent recursion: peel
one legal remainder box at a time until the components divide exactly, adding
r per box.  The recursion never consults the closed formula, so agreement on
the full enumeration is a real check, not a tautology.
"""

from fractions import Fraction

import pytest

from gieseker import (
    IRRATIONAL,
    Cocharacter,
    RegimeError,
    annihilator_index,
    block_structure,
    enumerate_multipartitions,
    fixed_point_weight,
    hooks,
    legal_removals,
    multipartition_size,
    poincare_polynomial,
    polynomial_string,
    semisimplicity,
    support_dimension,
    support_dimension_recursive,
    support_recursion_values,
    top_cohomology_check,
)


# ------------------------------------------------------------ poincare


def test_poincare_small():
    assert poincare_polynomial(2, 1) == (1, 1)
    assert poincare_polynomial(1, 2) == (1, 1)
    assert poincare_polynomial(2, 2) == (1, 1, 2, 1)
    assert poincare_polynomial(1, 1) == (1,)


def test_polynomial_string():
    assert polynomial_string((1, 1, 2, 1)) == "1 + t + 2t^2 + t^3"
    assert polynomial_string((1,)) == "1"
    assert polynomial_string((0, 3)) == "3t"


def test_poincare_structure():
    for n in range(1, 8):
        for r in range(1, 4):
            coeffs = poincare_polynomial(n, r)
            assert coeffs[0] == 1
            assert len(coeffs) == r * n  # degree rn - 1
            assert coeffs[-1] == 1
            assert sum(coeffs) == len(enumerate_multipartitions(n, r))
            assert all(c >= 0 for c in coeffs)


def test_top_weight_has_unique_maximizer():
    for n in range(1, 6):
        for r in range(1, 4):
            assert top_cohomology_check(n, r)
            top = [
                sig
                for sig in enumerate_multipartitions(n, r)
                if fixed_point_weight(sig, r) == r * n - 1
            ]
            assert top == [((n,),) + ((),) * (r - 1)]


def test_fixed_point_weights_are_degrees():
    # the generating function is literally the histogram of the weights
    n, r = 3, 2
    coeffs = poincare_polynomial(n, r)
    hist = [0] * (r * n)
    for sig in enumerate_multipartitions(n, r):
        hist[fixed_point_weight(sig, r)] += 1
    assert tuple(hist) == coeffs


# ------------------------------------------------------------ semisimplicity


@pytest.mark.parametrize(
    "n,r,lam,verdict",
    [
        (3, 2, Fraction(1, 5), "semisimple"),
        (3, 2, Fraction(1, 3), "not_semisimple"),
        (4, 1, Fraction(1, 2), "not_semisimple"),
        (3, 2, IRRATIONAL, "semisimple"),
        (2, 2, Fraction(1, 1), "unknown"),
        (4, 2, Fraction(-1, 3), "unknown"),
    ],
)
def test_semisimplicity(n, r, lam, verdict):
    assert semisimplicity(n, r, lam) == verdict


# ------------------------------------------------------------ supports


def test_support_examples():
    rep = support_dimension(2, 1, Fraction(1, 2), ((2,),))
    assert (rep.support_dim, rep.quotient_size) == (1, 1)
    rep = support_dimension(2, 1, Fraction(1, 2), ((1, 1),))
    assert (rep.support_dim, rep.quotient_size) == (2, 0)
    rep = support_dimension(3, 2, Fraction(1, 2), ((2,), (1,)))
    assert rep.support_dim == 3  # 6 - 1*(2*2*2-... ) = 6 - 1*3


def test_support_irrational_is_full():
    rep = support_dimension(3, 2, IRRATIONAL, ((2,), (1,)))
    assert rep.support_dim == 6 and rep.quotient_size == 0


def test_support_regime_errors():
    with pytest.raises(RegimeError):
        support_dimension(2, 1, Fraction(3, 1), ((2,),))  # integral parameter
    with pytest.raises(RegimeError):
        support_dimension(2, 1, Fraction(-1, 2), ((2,),))  # negative side
    with pytest.raises(ValueError):
        support_dimension(2, 1, Fraction(1, 2), ((1,),))  # wrong total


def test_annihilator_examples():
    assert annihilator_index(4, 1, Fraction(1, 2), ((4,),)) == 2
    assert annihilator_index(4, 1, Fraction(1, 2), ((1, 1, 1, 1),)) == 0
    assert annihilator_index(3, 2, Fraction(1, 2), ((2,), (1,))) == 1


def test_legal_removals_keep_quotients():
    # (2,1) mod 2: removing row 0 gives (1,1) (quotient stays empty, legal);
    # removing row 1 gives (2) (quotient jumps to (1), illegal)
    assert legal_removals(((2, 1),), 2) == [(0, 0)]
    # exactly divisible components offer nothing to remove
    assert legal_removals(((2,),), 2) == []
    assert legal_removals(((4, 2),), 2) == []
    from gieseker import divide_with_remainder, remove_corner

    for m in (2, 3):
        for sig in enumerate_multipartitions(5, 2):
            for slot, row in legal_removals(sig, m):
                before = divide_with_remainder(sig[slot], m)[0]
                after = divide_with_remainder(remove_corner(sig[slot], row), m)[0]
                assert before == after


def test_recursion_base_cases():
    assert support_dimension_recursive(2, 1, 2, ((2,),)) == 1
    assert support_dimension_recursive(2, 2, 2, ((), (2,))) == 4
    assert support_dimension_recursive(3, 1, 2, ((2, 1),)) == 3
    assert support_dimension_recursive(1, 2, 3, ((1,), ())) == 2  # n < m: full rn


def test_recursion_corner_independence_spot():
    vals = support_recursion_values(3, 1, 2, ((2, 1),))
    assert vals == frozenset({3})


def test_closed_formula_equals_recursion_exhaustive():
    for m in (2, 3):
        for n in range(1, 9):
            for r in range(1, 4):
                lam = Fraction(1, m)
                for sig in enumerate_multipartitions(n, r):
                    closed = support_dimension(n, r, lam, sig).support_dim
                    rec = support_dimension_recursive(n, r, m, sig)
                    assert closed == rec, (n, r, m, sig)


def test_holonomicity_bound():
    # twice the support dimension matches the unreduced variety dimension
    for m in (2, 3):
        for n in range(1, 9):
            for r in range(1, 4):
                lam = Fraction(1, m)
                for sig in enumerate_multipartitions(n, r):
                    rep = support_dimension(n, r, lam, sig)
                    assert 2 * rep.support_dim == 2 * r * n - rep.quotient_size * (
                        2 * r * m - 2
                    )


# ------------------------------------------------------------ blocks


DOM = Cocharacter((100, 10, 1), 1)


def test_block_hooks_rank_one():
    b = block_structure(2, 1, Fraction(1, 2), Cocharacter((5,), 1))
    assert b.kind == "hooks_block"
    assert b.labels_ordered is True
    assert b.labels == (((1, 1),), ((2,),))
    assert b.finite_dim_label == ((2,),)


def test_block_hooks_3_2_order():
    b = block_structure(3, 2, Fraction(1, 3), Cocharacter((100, 10), 1))
    assert b.kind == "hooks_block"
    assert len(b.labels) == 6
    assert b.labels == tuple(h.multipartition() for h in hooks(3, 2))
    assert b.finite_dim_label == ((3,), ())


def test_block_semisimple():
    b = block_structure(3, 2, Fraction(1, 5), Cocharacter((100, 10), 1))
    assert b.kind == "semisimple"
    assert b.labels is None
    b = block_structure(3, 2, IRRATIONAL, Cocharacter((100, 10), 1))
    assert b.kind == "semisimple"


def test_block_partial_unknown():
    b = block_structure(4, 2, Fraction(1, 2), Cocharacter((100, 10), 1))
    assert b.kind == "partial_unknown"


def test_block_non_dominant_candidates():
    nu = Cocharacter((1, 10), -1)  # generic but not dominant
    b = block_structure(2, 2, Fraction(1, 2), nu)
    assert b.kind == "hooks_block"
    assert b.labels_ordered is False
    assert set(b.labels) == {h.multipartition() for h in hooks(2, 2)}
    assert b.finite_dim_label is None
    assert b.finite_dim_candidates == ((2,), (1, 1))


def test_block_regime_errors():
    with pytest.raises(RegimeError):
        block_structure(2, 1, Fraction(3, 1), Cocharacter((5,), 1))  # m = 1
    with pytest.raises(RegimeError):
        block_structure(2, 1, Fraction(1, 2), Cocharacter((0,), 0))  # zero cochar
    with pytest.raises(RegimeError):
        block_structure(2, 2, Fraction(1, 2), Cocharacter((1, 0), 1))  # on a wall


def test_findim_label_gated_on_findim():
    # at lambda = -1/2 the hooks block would sit at a singular parameter; the
    # support machinery refuses long before labels are assigned
    with pytest.raises(RegimeError):
        support_dimension(2, 1, Fraction(-1, 2), ((2,),))
