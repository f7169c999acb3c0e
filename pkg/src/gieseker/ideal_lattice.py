"""Two-sided ideal structure: leaf labels, the prime chain, antichain calculus.

Ideals of the k-fold tensor power of the algebra correspond to antichains of
subsets of {1..k}: an ideal determines the up-closed family of index sets
whose basic prime contains it, and the antichain of minimal members pins the
family down.  Intersection of ideals is union of up-closed families, sum is
intersection, and product equals intersection (every ideal is idempotent).
The intersection form and the sum form of the same ideal are exchanged by
minimal transversals.

Conventions: the whole algebra is the EMPTY antichain (empty intersection);
the zero ideal is the antichain {{}} whose single member is the empty set
(empty sum).  Minimal-transversal duality swaps the two.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from itertools import combinations

from .diagnostics import (
    Parameter,
    as_parameter,
    has_finite_global_dimension,
    reduced_denominator,
)
from .partitions import Partition, check_partition, enumerate_partitions

LeafLabel = Partition  # unordered collection of positive ints, stored sorted desc


def enumerate_leaves(n: int, r: int) -> list[LeafLabel]:
    """Symplectic leaves: collections (n_1 >= ... >= n_k > 0) with sum <= n.

    Ordered by number of parts, then total, then the partition enumeration
    order.  The empty collection is the open leaf.  Requires r >= 2; the
    rank-one stratification is different and out of scope.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if r < 2:
        raise ValueError("leaf classification requires r >= 2")
    out: list[LeafLabel] = []
    for parts in range(0, n + 1):
        for total in range(parts, n + 1):
            out.extend(
                lam for lam in enumerate_partitions(total) if len(lam) == parts
            )
    return out


def leaf_dimension(leaf: LeafLabel, n: int, r: int, reduced: bool = True) -> int:
    """Dimension of the leaf with slice prod of moduli of sizes n_i.

    Reduced convention: ambient dim 2rn - 2 minus slice dim sum(2*r*n_i - 2).
    With reduced=False both ambient and slice gain the extra 2-dimensional
    framing factor, so the value is 2 larger.
    """
    leaf = check_partition(leaf)
    if sum(leaf) > n:
        raise ValueError("leaf collection exceeds total n")
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    dim = (2 * r * n - 2) - sum(2 * r * a - 2 for a in leaf)
    return dim if reduced else dim + 2


@dataclass(frozen=True)
class IdealChainEntry:
    index: int  # position i in the chain, 1-based from the smallest ideal
    leaf: LeafLabel  # i copies of the denominator
    variety_dim: int | None  # reduced convention; None when r = 1


@dataclass(frozen=True)
class IdealChain:
    n: int
    r: int
    denominator: int | None  # None = +infinity
    simple: bool  # no proper two-sided ideals
    entries: tuple[IdealChainEntry, ...]  # increasing index = larger ideal


def ideal_chain(n: int, r: int, lam: Parameter) -> IdealChain:
    """The chain of proper two-sided ideals at parameter lam.

    Infinite global dimension forces a simple algebra (no entries); otherwise
    there are floor(n/m) proper ideals, all prime, linearly ordered, the i-th
    sitting over the leaf with i collection entries equal to m.  Variety
    dimensions use the reduced convention and are only defined for r >= 2.
    """
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    lam = as_parameter(lam)
    m = reduced_denominator(lam)
    if not has_finite_global_dimension(n, r, lam):
        return IdealChain(n, r, m, simple=True, entries=())
    count = 0 if m is None else n // m
    entries = tuple(
        IdealChainEntry(
            index=i,
            leaf=(m,) * i,
            variety_dim=leaf_dimension((m,) * i, n, r) if r >= 2 else None,
        )
        for i in range(1, count + 1)
    )
    return IdealChain(n, r, m, simple=count == 0, entries=entries)


Subset = frozenset[int]


@dataclass(frozen=True)
class IdealAntichain:
    """An ideal of the k-fold tensor power, as the antichain of a set family.

    ``members`` are pairwise incomparable subsets of {1..k}.  The form tag
    records whether the ideal is the intersection of the basic primes I_Lambda
    over the members, or the sum of the basic products I^Lambda.
    """

    k: int
    members: frozenset[Subset]
    form: str = "intersection"  # "intersection" | "sum"

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("need k >= 1")
        if self.form not in ("intersection", "sum"):
            raise ValueError(f"unknown form {self.form!r}")
        ground = set(range(1, self.k + 1))
        for s in self.members:
            if not s <= ground:
                raise ValueError(f"member {sorted(s)} not within 1..{self.k}")
        for a in self.members:
            for b in self.members:
                if a != b and a <= b:
                    raise ValueError("members must be pairwise incomparable")

    def to_lists(self) -> list[list[int]]:
        return sorted([sorted(s) for s in self.members], key=lambda c: (len(c), c))


def minimal_members(subsets) -> frozenset[Subset]:
    fam = {frozenset(s) for s in subsets}
    return frozenset(
        s for s in fam if not any(t < s for t in fam)
    )


def antichain_normalize(subsets, k: int, form: str = "intersection") -> IdealAntichain:
    """Drop every member that contains another member; keep the minimal ones."""
    return IdealAntichain(k, minimal_members(subsets), form)


def up_closure(a: IdealAntichain) -> frozenset[Subset]:
    """All subsets of {1..k} containing some member.  Exponential in k."""
    ground = tuple(range(1, a.k + 1))
    out = set()
    for size in range(a.k + 1):
        for combo in combinations(ground, size):
            s = frozenset(combo)
            if any(m <= s for m in a.members):
                out.add(s)
    return frozenset(out)


def from_up_closure(family, k: int) -> IdealAntichain:
    return antichain_normalize(family, k)


def _require_compatible(a: IdealAntichain, b: IdealAntichain) -> None:
    if a.k != b.k:
        raise ValueError(f"mismatched tensor powers k={a.k} vs k={b.k}")
    if a.form != "intersection" or b.form != "intersection":
        raise ValueError("lattice operations expect intersection form")


def intersect(a: IdealAntichain, b: IdealAntichain) -> IdealAntichain:
    """Intersection of ideals: union of up-closed families."""
    _require_compatible(a, b)
    return antichain_normalize(a.members | b.members, a.k)


def sum_(a: IdealAntichain, b: IdealAntichain) -> IdealAntichain:
    """Sum of ideals: intersection of up-closed families = pairwise unions."""
    _require_compatible(a, b)
    unions = {x | y for x in a.members for y in b.members}
    return antichain_normalize(unions, a.k)


def product(a: IdealAntichain, b: IdealAntichain) -> IdealAntichain:
    """Product of ideals; equals the intersection since every ideal is
    semiprime and sums of the basic building blocks are idempotent."""
    return intersect(a, b)


def contains(a: IdealAntichain, b: IdealAntichain) -> bool:
    """Ideal containment a <= b: every member of b contains some member of a."""
    _require_compatible(a, b)
    return all(any(x <= y for x in a.members) for y in b.members)


def minimal_transversals(members: frozenset[Subset]) -> frozenset[Subset]:
    """Minimal hitting sets of the member family within {1..k}.

    The empty family is hit by the empty set; a family containing the empty
    set has no transversal at all.  On antichains the operation is an
    involution, swapping the whole-algebra and zero-ideal extremes.
    """
    if not members:
        return frozenset({frozenset()})
    if frozenset() in members:
        return frozenset()
    universe = sorted(set().union(*members))
    hits = []
    for size in range(0, len(universe) + 1):
        for combo in combinations(universe, size):
            s = frozenset(combo)
            if all(s & m for m in members):
                if not any(t <= s for t in hits):
                    hits.append(s)
    return frozenset(hits)


def to_sum_form(a: IdealAntichain) -> IdealAntichain:
    if a.form != "intersection":
        raise ValueError("expected intersection form")
    return IdealAntichain(a.k, minimal_transversals(a.members), "sum")


def to_intersection_form(a: IdealAntichain) -> IdealAntichain:
    if a.form != "sum":
        raise ValueError("expected sum form")
    return IdealAntichain(a.k, minimal_transversals(a.members), "intersection")


@cache
def _up_sets(k: int) -> tuple[frozenset[Subset], ...]:
    """All up-closed families of subsets of {1..k} (2 extremes included)."""
    if k == 0:
        empty: frozenset[Subset] = frozenset()
        full = frozenset({frozenset()})
        return (empty, full)
    smaller = _up_sets(k - 1)
    out = []
    for u1 in smaller:
        for u0 in smaller:
            # a family on {1..k} splits as U0 (sets without k) and U1+k (sets
            # with k); up-closedness forces U0 subset-of U1, both up-closed
            if u0 <= u1:
                out.append(u0 | frozenset(s | {k} for s in u1))
    return tuple(out)


def enumerate_ideals(k: int) -> list[IdealAntichain]:
    """Every ideal of the k-fold tensor power, as intersection-form antichains."""
    if not 1 <= k <= 4:
        raise ValueError("enumeration supported for 1 <= k <= 4")
    return [from_up_closure(u, k) for u in _up_sets(k)]


def count_ideals(k: int) -> int:
    """Number of ideals (antichains on {1..k}, extremes included); k <= 5."""
    if not 1 <= k <= 5:
        raise ValueError("supported range is 1 <= k <= 5")
    if k <= 4:
        return len(_up_sets(k))
    smaller = _up_sets(4)
    return sum(1 for u1 in smaller for u0 in smaller if u0 <= u1)


def parse_antichain(text: str, k: int, form: str = "intersection") -> IdealAntichain:
    """Parse '[[1],[2]]'-style JSON into a normalized antichain."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"cannot parse antichain from {text!r}") from exc
    if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
        raise ValueError("antichain must be a list of index lists")
    members = []
    for c in data:
        if not all(isinstance(x, int) and 1 <= x <= k for x in c):
            raise ValueError(f"indices must be integers in 1..{k}: {c}")
        members.append(frozenset(c))
    return antichain_normalize(members, k, form)


def format_antichain(a: IdealAntichain) -> str:
    return json.dumps(a.to_lists())
