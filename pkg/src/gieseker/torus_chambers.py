"""One-parameter-subgroup arithmetic: walls, genericity, dominance, chambers.

A cocharacter nu = ((d_1, ..., d_r); k) acts on the framing torus and on the
base plane; its fixed locus on the moduli space is finite exactly off a finite
wall arrangement: the hyperplane k = 0 and the hyperplanes d_i - d_j = s*k
with i < j and |s| < n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import RegimeError
from .partitions import count_partitions, enumerate_compositions


@dataclass(frozen=True)
class Cocharacter:
    d: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if len(self.d) < 1:
            raise ValueError("need at least one framing weight")
        if not all(isinstance(x, int) for x in self.d) or not isinstance(self.k, int):
            raise ValueError("cocharacter entries must be integers")

    @property
    def r(self) -> int:
        return len(self.d)

    def is_zero(self) -> bool:
        return self.k == 0 and all(x == 0 for x in self.d)


def parse_cocharacter(text: str) -> Cocharacter:
    """Parse "d1,...,dr;k"."""
    try:
        d_part, k_part = text.strip().split(";")
        d = tuple(int(tok) for tok in d_part.split(","))
        k = int(k_part)
    except ValueError as exc:
        raise ValueError(f"cannot parse cocharacter from {text!r}") from exc
    return Cocharacter(d, k)


def format_cocharacter(nu: Cocharacter) -> str:
    return ",".join(str(x) for x in nu.d) + f";{nu.k}"


@dataclass(frozen=True)
class Wall:
    """Linear form on (d, k)-space: either k itself or d_i - d_j - s*k."""

    kind: str  # "k_zero" | "pair"
    i: int = 0  # 1-based, i < j; unused for k_zero
    j: int = 0
    s: int = 0

    def evaluate(self, nu: Cocharacter) -> int:
        if self.kind == "k_zero":
            return nu.k
        return nu.d[self.i - 1] - nu.d[self.j - 1] - self.s * nu.k

    def __str__(self) -> str:
        if self.kind == "k_zero":
            return "k=0"
        if self.s == 0:
            rhs = "0"
        elif self.s == 1:
            rhs = "k"
        elif self.s == -1:
            rhs = "-k"
        else:
            rhs = f"{self.s}k"
        return f"d{self.i}-d{self.j}={rhs}"


@dataclass(frozen=True)
class WallSet:
    n: int
    r: int
    walls: tuple[Wall, ...]
    count_with_multiplicity: int


def walls(n: int, r: int) -> WallSet:
    """The full wall arrangement for rank r at n points.

    1 + r(r-1)/2 * (2n-1) forms before deduplication; the forms are pairwise
    non-proportional, so deduplication never actually merges any.
    """
    if n < 1 or r < 1:
        raise ValueError("need n >= 1 and r >= 1")
    out = [Wall("k_zero")]
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            for s in range(-(n - 1), n):
                out.append(Wall("pair", i, j, s))
    raw_count = len(out)
    assert raw_count == 1 + r * (r - 1) // 2 * (2 * n - 1)
    return WallSet(n, r, tuple(dict.fromkeys(out)), raw_count)


def violated_walls(nu: Cocharacter, n: int) -> list[Wall]:
    """Walls the cocharacter lies on."""
    return [w for w in walls(n, nu.r).walls if w.evaluate(nu) == 0]


def is_generic(nu: Cocharacter, n: int) -> bool:
    """Finite fixed locus: off every wall.  Zero cocharacter rejected."""
    if nu.is_zero():
        raise RegimeError("the zero cocharacter is never generic")
    return not violated_walls(nu, n)


def is_dominant(nu: Cocharacter, n: int) -> bool:
    """k >= 1 with gaps d_i - d_{i+1} > n*k (strict, scale-invariant)."""
    if nu.k < 1:
        return False
    return all(nu.d[i] - nu.d[i + 1] > n * nu.k for i in range(nu.r - 1))


def same_chamber(nu: Cocharacter, nu2: Cocharacter, n: int) -> bool:
    """Whether two generic cocharacters have identical sign data on all walls."""
    if nu.r != nu2.r:
        raise ValueError("cocharacters must have the same rank")
    for candidate in (nu, nu2):
        bad = violated_walls(candidate, n)
        if candidate.is_zero() or bad:
            label = str(bad[0]) if bad else "zero cocharacter"
            raise RegimeError(
                f"cocharacter {format_cocharacter(candidate)} is not generic "
                f"(lies on wall {label})"
            )
    return all(
        _sign(w.evaluate(nu)) == _sign(w.evaluate(nu2))
        for w in walls(n, nu.r).walls
    )


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class FixedComponent:
    composition: tuple[int, ...]  # (n_1, ..., n_r), one Hilbert factor each
    dimension: int  # always 2n
    fixed_point_count: int  # product of partition counts of the n_i


def fixed_components_k0(nu0: Cocharacter, n: int) -> list[FixedComponent]:
    """Fixed-locus components for k = 0 and pairwise distinct framing weights.

    One component per composition (n_1, ..., n_r) of n; the component is a
    product of Hilbert schemes of n_i points, of total dimension 2n, with
    prod p(n_i) torus-fixed points.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    if nu0.k != 0:
        raise RegimeError("fixed-component classification requires k = 0")
    if len(set(nu0.d)) != nu0.r:
        raise RegimeError(
            "repeated framing weights give a coarser fixed locus; "
            "pairwise distinct d_i required"
        )
    return [
        FixedComponent(
            composition=comp,
            dimension=2 * n,
            fixed_point_count=prod(count_partitions(a) for a in comp),
        )
        for comp in enumerate_compositions(n, nu0.r)
    ]
