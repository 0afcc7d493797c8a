"""Topology of circle bundles over projective manifolds and basic Hodge data.

A Boothby-Wang fibration over a simply connected surface with primitive
Euler class has a simply connected, torsion-free total space, classified by
its second Betti number and spin-ness (Smale for spin, Barden otherwise).
The basic Hodge numbers of the induced regular Sasaki structure are the
Hodge numbers of the base, and Hamilton's divisibility d(c1) of the base
obstructs equivalence of the contact structures when the contact c1
vanishes.  Hodge diamonds with Kunneth products cover the bookkeeping for
the 7-dimensional and higher-dimensional constructions over
complete-intersection threefolds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .complete_intersection import (
    WallInvariants,
    are_diffeomorphic_wall,
    ci3_hodge,
)
from .errors import DomainError, IntegrityError
from .surface_tuples import SurfaceInvariants


class ContactVerdict(Enum):
    """Outcome of a one-directional contact-inequivalence test."""

    INEQUIVALENT = "inequivalent"
    INCONCLUSIVE = "inconclusive"


class LinkSign(Enum):
    POSITIVE = "positive"
    NULL = "null"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class SmaleBardenType:
    """Simply connected 5-manifold with torsion-free H2: #n(S^2 x S^3),
    plus one twisted S^3-bundle summand when not spin."""

    n: int
    spin: bool

    def label(self) -> str:
        if self.spin:
            return "S^5" if self.n == 0 else f"#{self.n}(S^2 x S^3)"
        if self.n == 0:
            return "S^2 ~x S^3"
        return f"#{self.n}(S^2 x S^3) # (S^2 ~x S^3)"


@dataclass(frozen=True)
class BaseSurfaceData:
    """Input record for the 5-dimensional classification.

    euler_class is an integer vector in the same basis as the invariants'
    c1_coeffs and must be primitive; the caller vouches for simple
    connectivity and for primitivity of the restricted class.
    """

    invariants: SurfaceInvariants
    euler_class: tuple[int, ...]
    simply_connected: bool = True


@dataclass(frozen=True)
class BoothbyWangReport:
    manifold: SmaleBardenType
    contact_c1_zero: bool
    hamilton_div: int
    basic_hodge: tuple[int, int, int]  # (h02, h11, b2) of the base
    negative_type: bool
    note: str = ""


def _integer_multiple(c1: Sequence[int], w: Sequence[int]) -> Optional[int]:
    """t with c1 = t*w componentwise, if one exists (w primitive, so t is
    forced to be an integer whenever c1 is parallel to w)."""
    if all(c == 0 for c in c1):
        return 0
    for c, wi in zip(c1, w):
        if wi:
            t, r = divmod(c, wi)
            if r:
                return None
            if all(x == t * y for x, y in zip(c1, w)):
                return t
            return None
    return None


def bw_classify(base: BaseSurfaceData) -> BoothbyWangReport:
    """Classify the circle-bundle total space and collect the Sasaki data.

    The total space is spin iff the base is spin or c1 = euler class mod 2;
    it is then #(b2-1)(S^2 x S^3) or its non-spin Barden partner.  The
    contact c1 vanishes iff the base c1 is an integer multiple of the Euler
    class, and the structure has negative type iff the canonical bundle is
    ample and the Euler class points along -c1.
    """
    inv = base.invariants
    w = tuple(int(x) for x in base.euler_class)
    if len(w) != len(inv.c1_coeffs):
        raise DomainError("euler class must use the same basis as c1_coeffs")
    if not base.simply_connected:
        raise DomainError("classification requires a simply connected base")
    if math.gcd(*(abs(x) for x in w)) != 1:
        raise DomainError(f"euler class {w} is not primitive")
    c1 = inv.c1_coeffs
    spin_total = inv.spin or all((a - b) % 2 == 0 for a, b in zip(c1, w))
    n = inv.b2 - 1
    if n < 0:
        raise IntegrityError("base must have b2 >= 1")
    t = _integer_multiple(c1, w)
    negative = inv.ample_canonical and t is not None and t < 0
    note = ""
    if inv.ample_canonical and not negative:
        note = "general-type base, but the Euler class is not a negative multiple of c1"
    return BoothbyWangReport(
        manifold=SmaleBardenType(n=n, spin=spin_total),
        contact_c1_zero=t is not None,
        hamilton_div=inv.c1_div,
        basic_hodge=(inv.h02, inv.h11, inv.b2),
        negative_type=negative,
        note=note,
    )


def hamilton_obstruction(r1: BoothbyWangReport, r2: BoothbyWangReport) -> ContactVerdict:
    """Compare d(c1) of the two bases; different divisibilities prove the
    contact structures inequivalent, equal ones prove nothing."""
    if r1.manifold != r2.manifold:
        raise DomainError("obstruction applies to the same underlying manifold only")
    if not (r1.contact_c1_zero and r2.contact_c1_zero):
        raise DomainError("obstruction needs trivial contact c1 on both sides")
    if r1.hamilton_div != r2.hamilton_div:
        return ContactVerdict.INEQUIVALENT
    return ContactVerdict.INCONCLUSIVE


def link_sign(weights: Iterable[int], degree: int) -> LinkSign:
    """Sign of sum(w_i) - d for the link of a weighted homogeneous
    singularity; only the positive case certifies a positive structure."""
    ws = [int(w) for w in weights]
    if any(w < 1 for w in ws) or degree < 1:
        raise DomainError("weights and degree must be positive")
    total = sum(ws) - degree
    if total > 0:
        return LinkSign.POSITIVE
    if total == 0:
        return LinkSign.NULL
    return LinkSign.NEGATIVE


@dataclass(frozen=True)
class HodgeDiamond:
    """Square array of Hodge numbers with h^{p,q} = rows[p][q].

    Validated for Hodge symmetry, Serre duality, nonnegativity and
    h^{0,0} = 1.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(h) for h in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows) - 1
        if n < 0 or any(len(row) != n + 1 for row in rows):
            raise DomainError("diamond must be a nonempty square array")
        if rows[0][0] != 1:
            raise IntegrityError("h^{0,0} must be 1")
        for p in range(n + 1):
            for q in range(n + 1):
                h = rows[p][q]
                if h < 0:
                    raise IntegrityError(f"negative entry h^{{{p},{q}}} = {h}")
                if h != rows[q][p]:
                    raise IntegrityError("Hodge symmetry violated")
                if h != rows[n - p][n - q]:
                    raise IntegrityError("Serre duality violated")

    @property
    def dim(self) -> int:
        return len(self.rows) - 1

    def h(self, p: int, q: int) -> int:
        return self.rows[p][q]

    def euler(self) -> int:
        return sum(
            (-1) ** (p + q) * h
            for p, row in enumerate(self.rows)
            for q, h in enumerate(row)
        )

    @classmethod
    def point(cls) -> "HodgeDiamond":
        return cls(((1,),))

    @classmethod
    def curve(cls, genus: int) -> "HodgeDiamond":
        if genus < 0:
            raise DomainError("genus must be nonnegative")
        return cls(((1, genus), (genus, 1)))


def kunneth_hodge(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    """Diamond of a product: h^{p,q} = sum h^{s,t}(a) h^{p-s,q-t}(b)."""
    n = a.dim + b.dim
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(a.dim + 1):
        for q in range(a.dim + 1):
            ha = a.rows[p][q]
            if not ha:
                continue
            for s in range(b.dim + 1):
                for t in range(b.dim + 1):
                    rows[p + s][q + t] += ha * b.rows[s][t]
    return HodgeDiamond(tuple(tuple(row) for row in rows))


def ci3_diamond(w: WallInvariants, d: int) -> HodgeDiamond:
    """Diamond of a complete-intersection threefold: CP^3-like below the
    middle row, which comes from the Wall data."""
    hd = ci3_hodge(w, d)
    rows = [[0] * 4 for _ in range(4)]
    for p in range(4):
        rows[p][p] = 1
    rows[3][0] = rows[0][3] = hd.h03
    rows[2][1] = rows[1][2] = hd.h12
    return HodgeDiamond(tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class SevenDimPairReport:
    """Two Sasaki structures on one 7-manifold, distinguished by basic Hodge
    numbers; the Euler class k*x makes the fundamental group cyclic of
    order k (k = 1: simply connected)."""

    euler_multiple: int
    fundamental_group_order: int
    diamonds: tuple[HodgeDiamond, HodgeDiamond]


def seven_dim_pair(
    k: int, pair: tuple[WallInvariants, WallInvariants]
) -> SevenDimPairReport:
    """Circle bundles with Euler class k*x over a Wall-diffeomorphic pair of
    threefolds with different c1."""
    if k < 1:
        raise DomainError("need k >= 1")
    a, b = pair
    if not are_diffeomorphic_wall(a, b):
        raise DomainError("the two threefolds must pass the Wall test")
    if a.k == b.k:
        raise DomainError("first Chern classes must differ")
    da = ci3_diamond(a, a.d)
    db = ci3_diamond(b, b.d)
    if da == db:
        raise IntegrityError("distinct c1 must give distinct Hodge numbers")
    return SevenDimPairReport(
        euler_multiple=k, fundamental_group_order=k, diamonds=(da, db)
    )


@dataclass(frozen=True)
class HigherDimPairReport:
    """Sasaki pair over products (threefold x fixed factor), in odd total
    dimension 2(3 + dim P) + 1."""

    total_dimension: int
    factor_ample_canonical: bool
    diamonds: tuple[HodgeDiamond, HodgeDiamond]


def higher_dim_pair(
    pair: tuple[WallInvariants, WallInvariants],
    p_diamond: HodgeDiamond,
    factor_ample_canonical: bool = True,
) -> HigherDimPairReport:
    """Kunneth diamonds of (X_i x P) for a Wall pair with different c1; the
    products stay different because the threefold diamonds do."""
    a, b = pair
    if not are_diffeomorphic_wall(a, b):
        raise DomainError("the two threefolds must pass the Wall test")
    if a.k == b.k:
        raise DomainError("first Chern classes must differ")
    da = kunneth_hodge(ci3_diamond(a, a.d), p_diamond)
    db = kunneth_hodge(ci3_diamond(b, b.d), p_diamond)
    if da == db:
        raise IntegrityError("Kunneth products of distinct threefold diamonds agree")
    return HigherDimPairReport(
        total_dimension=2 * (3 + p_diamond.dim) + 1,
        factor_ample_canonical=factor_ample_canonical,
        diamonds=(da, db),
    )
