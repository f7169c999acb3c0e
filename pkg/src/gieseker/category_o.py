"""Category-O numerology: Betti generating polynomials, semisimplicity,
support dimensions of simples, annihilators, and block structure.

Simples are labeled by r-multipartitions of n.  For a positive rational
parameter with denominator m > 1 and a dominant cocharacter, the support
dimension of the simple at sigma is rn - |q|(rm - 1) where q is the partition
quotient of the first component sigma^(1) divided by m; the annihilator of
that simple is the |q|-th ideal of the chain (index 0 = zero ideal).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .diagnostics import (
    Parameter,
    _Irrational,
    as_parameter,
    has_finite_dimensional_rep,
    has_finite_global_dimension,
    reduced_denominator,
)
from .errors import RegimeError
from .partitions import (
    Hook,
    Multipartition,
    Partition,
    check_partition,
    divide_with_remainder,
    enumerate_multipartitions,
    hooks,
    multipartition_size,
    remove_corner,
    removable_corners,
)
from .torus_chambers import Cocharacter, is_dominant, violated_walls


def fixed_point_weight(sigma: Multipartition, r: int) -> int:
    """Cohomological weight of a torus-fixed point: sum over components of
    r*|sigma^(i)| - i*(number of parts of sigma^(i))."""
    if len(sigma) != r:
        raise ValueError(f"expected {r} components")
    return sum(
        r * sum(comp) - i * len(comp) for i, comp in enumerate(sigma, start=1)
    )


def poincare_polynomial(n: int, r: int) -> tuple[int, ...]:
    """Coefficients (c_0, c_1, ...) of the even-Betti generating polynomial
    sum_i dim H^{2i} t^i of the resolution, via the fixed-point weight sum."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    weights = [fixed_point_weight(s, r) for s in enumerate_multipartitions(n, r)]
    coeffs = [0] * (max(weights) + 1)
    for w in weights:
        coeffs[w] += 1
    return tuple(coeffs)


def polynomial_string(coeffs: tuple[int, ...]) -> str:
    """Render (1, 1, 2, 1) as "1 + t + 2t^2 + t^3"."""
    terms = []
    for d, c in enumerate(coeffs):
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
        else:
            base = "t" if d == 1 else f"t^{d}"
            terms.append(base if c == 1 else f"{c}{base}")
    return " + ".join(terms) if terms else "0"


def top_cohomology_check(n: int, r: int) -> bool:
    """Top degree rn-1 with coefficient 1, attained only at ((n), (), ...)."""
    coeffs = poincare_polynomial(n, r)
    if len(coeffs) - 1 != r * n - 1 or coeffs[-1] != 1:
        return False
    top = r * n - 1
    maximizers = [
        s
        for s in enumerate_multipartitions(n, r)
        if fixed_point_weight(s, r) == top
    ]
    expected: Multipartition = ((n,),) + ((),) * (r - 1)
    return maximizers == [expected]


SEMISIMPLE = "semisimple"
NOT_SEMISIMPLE = "not_semisimple"
UNKNOWN = "unknown"


def semisimplicity(n: int, r: int, lam: Parameter) -> str:
    """Semisimplicity verdict for the category at parameter lam.

    Denominator > n (or irrational): semisimple.  Integral lam: unknown
    (delegated out of scope).  Denominator exactly n: not semisimple (the
    hooks block is nontrivial).  1 < m < n with lam > 0: not semisimple,
    witnessed by any label whose first component has a nonempty quotient by
    m (its support dimension rn - |q|(rm-1) < rn separates its block from the
    semisimple ones).  Anything else: unknown.
    """
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    lam = as_parameter(lam)
    m = reduced_denominator(lam)
    if m is None or m > n:
        return SEMISIMPLE
    if m == 1:
        return UNKNOWN
    if m == n:
        return NOT_SEMISIMPLE
    if not isinstance(lam, _Irrational) and lam > 0:
        return NOT_SEMISIMPLE
    return UNKNOWN


@dataclass(frozen=True)
class SupportReport:
    sigma: Multipartition
    denominator: int | None  # None = +infinity
    quotient_size: int  # |sigma^(1) quotient by m|; 0 when m infinite
    support_dim: int  # rn - quotient_size*(rm-1)
    annihilator_index: int  # 0 = zero ideal, i >= 1 = i-th chain ideal


def _support_regime(n: int, r: int, lam: Parameter) -> int | None:
    """Validate the support-formula hypotheses, returning the denominator."""
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    lam = as_parameter(lam)
    if isinstance(lam, _Irrational):
        return None
    m = lam.denominator
    if m == 1:
        raise RegimeError(
            "support formula requires denominator m > 1; integral parameters "
            "are out of scope"
        )
    if lam <= 0:
        raise RegimeError(
            "support formula requires lambda > 0 (localization regime); for "
            "lambda < 0 the parameter flip lambda -> -lambda - r identifies "
            "the algebras, but that normalization is not validated here"
        )
    return m


def support_dimension(
    n: int, r: int, lam: Parameter, sigma: Multipartition
) -> SupportReport:
    """Support dimension of the simple labeled by sigma (closed formula).

    Regime: lam rational positive with denominator m > 1, or irrational
    (infinite denominator, empty quotient); |sigma| = n; dominant cocharacter
    assumed on the category side.
    """
    lam = as_parameter(lam)
    m = _support_regime(n, r, lam)
    if len(sigma) != r:
        raise ValueError(f"expected {r} components in sigma")
    for comp in sigma:
        check_partition(comp)
    if multipartition_size(sigma) != n:
        raise ValueError(f"|sigma| must equal n = {n}")
    if m is None:
        qsize = 0
        support = r * n
    else:
        quotient, _ = divide_with_remainder(sigma[0], m)
        qsize = sum(quotient)
        support = r * n - qsize * (r * m - 1)
    assert 1 <= support <= r * n
    return SupportReport(
        sigma=sigma,
        denominator=m,
        quotient_size=qsize,
        support_dim=support,
        annihilator_index=qsize,
    )


def annihilator_index(n: int, r: int, lam: Parameter, sigma: Multipartition) -> int:
    """Chain index of the annihilator of the simple at sigma (0 = zero ideal)."""
    lam = as_parameter(lam)
    report = support_dimension(n, r, lam, sigma)
    # positive lambda always has finite global dimension, so the chain exists
    assert has_finite_global_dimension(n, r, lam)
    return report.annihilator_index


def _quotient(comp: Partition, m: int) -> Partition:
    return divide_with_remainder(comp, m)[0] if comp else ()


def legal_removals(sigma: Multipartition, m: int) -> list[tuple[int, int]]:
    """Pairs (component index, corner row) whose box removal is allowed in the
    support recursion: the component's remainder is nonempty, the removal
    leaves a partition, and the component's quotient is unchanged."""
    out = []
    for ci, comp in enumerate(sigma):
        if not comp:
            continue
        quotient, remainder = divide_with_remainder(comp, m)
        if not remainder:
            continue
        for row in removable_corners(comp):
            if _quotient(remove_corner(comp, row), m) == quotient:
                out.append((ci, row))
    return out


def _remove(sigma: Multipartition, ci: int, row: int) -> Multipartition:
    comps = list(sigma)
    comps[ci] = remove_corner(comps[ci], row)
    return tuple(comps)


def support_dimension_recursive(
    n: int, r: int, m: int, sigma: Multipartition
) -> int:
    """Independent recursion for the support dimension (restriction argument).

    Cases: n < m gives the full rn; if every component is exactly divisible
    by m (empty remainder), the first component contributes |q^(1)| and every
    other component |q^(i)| * rm; otherwise remove one legal box (any choice
    gives the same value) and add r.
    """
    if not isinstance(m, int) or m < 2:
        raise ValueError("need integer m >= 2")
    if len(sigma) != r:
        raise ValueError(f"expected {r} components in sigma")
    if multipartition_size(sigma) != n:
        raise ValueError(f"|sigma| must equal n = {n}")
    if n < m:
        return r * n
    divisions = [divide_with_remainder(c, m) if c else ((), ()) for c in sigma]
    if all(not rem for _, rem in divisions):
        first = sum(divisions[0][0])
        rest = sum(sum(q) for q, _ in divisions[1:])
        return first + rest * r * m
    choices = legal_removals(sigma, m)
    assert choices  # some component has a nonempty remainder with a legal corner
    ci, row = choices[0]
    return r + support_dimension_recursive(n - 1, r, m, _remove(sigma, ci, row))


def support_recursion_values(n: int, r: int, m: int, sigma: Multipartition) -> frozenset[int]:
    """Set of values the recursion can reach over ALL legal corner choices.

    A singleton certifies corner-choice independence for this input (the
    tested contract); memoized over multipartition states.
    """

    @cache
    def go(state: Multipartition) -> frozenset[int]:
        total = multipartition_size(state)
        if total < m:
            return frozenset({r * total})
        divisions = [divide_with_remainder(c, m) if c else ((), ()) for c in state]
        if all(not rem for _, rem in divisions):
            first = sum(divisions[0][0])
            rest = sum(sum(q) for q, _ in divisions[1:])
            return frozenset({first + rest * r * m})
        out = set()
        for ci, row in legal_removals(state, m):
            out.update(r + v for v in go(_remove(state, ci, row)))
        return frozenset(out)

    if multipartition_size(sigma) != n:
        raise ValueError(f"|sigma| must equal n = {n}")
    return go(tuple(sigma))


HOOKS_BLOCK = "hooks_block"
PARTIAL_UNKNOWN = "partial_unknown"


@dataclass(frozen=True)
class BlockStructure:
    n: int
    r: int
    denominator: int | None
    kind: str  # "semisimple" | "hooks_block" | "partial_unknown"
    labels: tuple[Multipartition, ...] | None  # hooks when kind = hooks_block
    labels_ordered: bool | None  # order meaningful only for dominant nu
    finite_dim_label: Multipartition | None
    finite_dim_candidates: tuple[Partition, ...] | None  # shapes, slot open
    note: str


def block_structure(
    n: int, r: int, lam: Parameter, nu: Cocharacter
) -> BlockStructure:
    """Block decomposition data of the category at (lam, nu).

    Requires generic nu and non-integral lam.  Denominator > n: semisimple.
    Denominator n: one nontrivial block whose simples are the rn hooks, in
    the slot-major leg-descending order when nu is dominant; for non-dominant
    nu only the label SET is known and the finite-dimensional simple narrows
    to a one-component (n) or (1^n).  1 < m < n: partial information only.
    """
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    lam = as_parameter(lam)
    if nu.r != r:
        raise ValueError("cocharacter rank must equal r")
    bad = violated_walls(nu, n) if not nu.is_zero() else []
    if nu.is_zero() or bad:
        label = str(bad[0]) if bad else "zero cocharacter"
        raise RegimeError(f"cocharacter is not generic (lies on wall {label})")
    m = reduced_denominator(lam)
    if m == 1:
        raise RegimeError(
            "integral parameters are out of scope for the block classification"
        )
    if m is None or m > n:
        return BlockStructure(
            n, r, m, SEMISIMPLE, None, None, None, None,
            note="denominator exceeds n; every block is a single simple",
        )
    if m == n:
        dominant = is_dominant(nu, n)
        findim = has_finite_dimensional_rep(n, r, lam)
        ordered_hooks = tuple(h.multipartition() for h in hooks(n, r))
        if dominant:
            label = Hook(n, r, 1, 1).multipartition() if findim else None
            return BlockStructure(
                n, r, m, HOOKS_BLOCK, ordered_hooks, True, label, None,
                note=(
                    "unique nontrivial block; labels listed largest first"
                    + ("" if findim else
                       "; no finite dimensional simple at this parameter")
                ),
            )
        candidates = ((n,), (1,) * n) if findim else None
        return BlockStructure(
            n, r, m, HOOKS_BLOCK,
            tuple(sorted(ordered_hooks)), False, None, candidates,
            note=(
                "unique nontrivial block; label order depends on the chamber"
                + ("; finite dimensional simple is a one-component (n) or (1^n)"
                   if findim else
                   "; no finite dimensional simple at this parameter")
            ),
        )
    return BlockStructure(
        n, r, m, PARTIAL_UNKNOWN, None, None, None, None,
        note=(
            "denominator strictly between 1 and n: block membership is only "
            "partially determined by supports; no full classification"
        ),
    )
