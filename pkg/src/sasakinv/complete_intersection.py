"""Chern classes and numbers of complete intersections via adjunction.

Everything is computed in the ambient cohomology ring: the total Chern
class of a complete intersection is c(T ambient) / prod_j c(O(d_j)), and
integrals over the intersection push forward by multiplying with the
product of the defining hyperplane classes.  For threefolds in a single
projective space this yields the Wall data (d, k, m, e) used to detect
diffeomorphic pairs, and the Hodge numbers h^{0,3}, h^{1,2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .cohomology import AmbientSpace, CohomologyClass
from .errors import DomainError, IntegrityError

MultiDegree = tuple[int, ...]


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    """Ambient product of projective spaces plus one multidegree per hypersurface.

    Multidegrees are canonicalized in descending order; the empty list is
    the ambient space itself.
    """

    ambient: AmbientSpace
    degrees: tuple[MultiDegree, ...] = ()

    def __post_init__(self) -> None:
        r = self.ambient.nfactors
        degs = []
        for md in self.degrees:
            md = tuple(int(d) for d in md)
            if len(md) != r:
                raise DomainError(f"multidegree {md} needs {r} entries")
            if any(d < 0 for d in md):
                raise DomainError(f"multidegree entries must be nonnegative: {md}")
            if not any(md):
                raise DomainError("multidegree must not be identically zero")
            degs.append(md)
        degs.sort(reverse=True)
        object.__setattr__(self, "degrees", tuple(degs))
        if self.dim < 1:
            raise DomainError(
                f"complete intersection has dimension {self.dim}; need >= 1"
            )

    @property
    def codim(self) -> int:
        return len(self.degrees)

    @property
    def dim(self) -> int:
        return self.ambient.dim - len(self.degrees)


def threefold_spec(degrees: Iterable[int]) -> CompleteIntersectionSpec:
    """Dimension-3 complete intersection of the given degrees in CP^(3+r)."""
    degs = tuple(int(d) for d in degrees)
    return CompleteIntersectionSpec(
        AmbientSpace((3 + len(degs),)), tuple((d,) for d in degs)
    )


def tangent_chern_class(spec: CompleteIntersectionSpec) -> CohomologyClass:
    """Total Chern class of the tangent bundle, restricted from the ambient ring.

    Adjunction: c(TX) = prod_i (1+x_i)^(n_i+1) / prod_j (1 + sum_i d_ji x_i).
    """
    amb = spec.ambient
    total = amb.one()
    for i, n in enumerate(amb.factor_dims):
        total = total * (amb.one() + amb.generator(i)) ** (n + 1)
    normal = amb.one()
    for md in spec.degrees:
        normal = normal * amb.line_class(md)
    return total * normal.unit_inverse()


def integrate_over_ci(spec: CompleteIntersectionSpec, a: CohomologyClass) -> int:
    """Pair an ambient class against the fundamental class of the intersection."""
    if a.ambient != spec.ambient:
        raise DomainError("class does not live on the intersection's ambient space")
    out = a
    for md in spec.degrees:
        out = out * spec.ambient.linear_form(md)
    return out.integrate()


@dataclass(frozen=True)
class ChernReport:
    """Chern data of a complete intersection of dimension 2 or 3.

    For surfaces the numbers are (c1sq, c2 = e); for threefolds
    (c1cubed, c1c2, c3 = e) plus the pairing of p1 = c1^2 - 2c2 against the
    hyperplane class when the ambient is a single projective space.
    """

    dim: int
    c1: CohomologyClass
    c1sq: Optional[int] = None
    c2: Optional[int] = None
    c1cubed: Optional[int] = None
    c1c2: Optional[int] = None
    c3: Optional[int] = None
    p1: Optional[int] = None

    @property
    def euler(self) -> int:
        return self.c2 if self.dim == 2 else self.c3


def chern_numbers(spec: CompleteIntersectionSpec) -> ChernReport:
    """Chern numbers of a dimension-2 or dimension-3 complete intersection."""
    if spec.dim not in (2, 3):
        raise DomainError(f"chern_numbers supports dimensions 2 and 3, got {spec.dim}")
    total = tangent_chern_class(spec)
    c1 = total.graded_part(1)
    c2 = total.graded_part(2)
    if spec.dim == 2:
        c1sq = integrate_over_ci(spec, c1 * c1)
        e = integrate_over_ci(spec, c2)
        if (c1sq + e) % 12:
            raise IntegrityError(f"Noether violated: 12 does not divide {c1sq}+{e}")
        return ChernReport(dim=2, c1=c1, c1sq=c1sq, c2=e)
    c3 = total.graded_part(3)
    c1cubed = integrate_over_ci(spec, c1 * c1 * c1)
    c1c2 = integrate_over_ci(spec, c1 * c2)
    e = integrate_over_ci(spec, c3)
    if c1c2 % 24:
        raise IntegrityError(f"24 does not divide c1c2 = {c1c2}")
    p1_pairing = None
    if spec.ambient.nfactors == 1:
        x = spec.ambient.generator(0)
        p1_pairing = integrate_over_ci(spec, (c1 * c1 - 2 * c2) * x)
    return ChernReport(
        dim=3, c1=c1, c1cubed=c1cubed, c1c2=c1c2, c3=e, p1=p1_pairing
    )


@dataclass(frozen=True)
class WallInvariants:
    """Diffeomorphism data of a complete-intersection threefold.

    H^2 is generated by the hyperplane class x; c1 = k*x, p1 = m*x^2,
    the total degree d pins the cup form, and e is the Euler number.
    """

    d: int
    k: int
    m: int
    e: int

    @property
    def k_parity(self) -> int:
        return self.k % 2

    @property
    def collision_key(self) -> tuple[int, int, int, int]:
        return (self.d, self.m, self.e, self.k_parity)


def wall_closed_forms(degrees: Iterable[int]) -> tuple[int, int, int]:
    """(d, k, m) of a threefold of the given degrees, without the ring pipeline.

    d = prod d_j, k = 4 + r - sum d_j, m = 4 + r - sum d_j^2.
    """
    degs = [int(d) for d in degrees]
    r = len(degs)
    return (
        math.prod(degs),
        4 + r - sum(degs),
        4 + r - sum(d * d for d in degs),
    )


def wall_invariants(spec: CompleteIntersectionSpec) -> WallInvariants:
    """Wall data of a threefold in a single projective space.

    The closed forms for k and m are cross-checked against the ring
    pipeline; degree-1 hypersurfaces must be normalized away first.
    """
    if spec.ambient.nfactors != 1:
        raise DomainError("Wall invariants need a single projective-space factor")
    if spec.dim != 3:
        raise DomainError(f"Wall invariants need dimension 3, got {spec.dim}")
    degs = [md[0] for md in spec.degrees]
    if any(d < 2 for d in degs):
        raise DomainError("degree-1 hypersurfaces must be dropped (cut down the ambient)")
    d, k, m = wall_closed_forms(degs)
    rep = chern_numbers(spec)
    if rep.c1 != spec.ambient.linear_form((k,)):
        raise IntegrityError(f"pipeline c1 {rep.c1} disagrees with k = {k}")
    if rep.p1 != m * d:
        raise IntegrityError(f"pipeline p1 pairing {rep.p1} disagrees with m*d = {m * d}")
    if 2 * rep.c1c2 != k * (k * k - m) * d:
        raise IntegrityError("pipeline c1c2 disagrees with k(k^2-m)d/2")
    return WallInvariants(d=d, k=k, m=m, e=rep.c3)


def are_diffeomorphic_wall(a: WallInvariants, b: WallInvariants) -> bool:
    """True iff (d, m, e, parity of k) agree, the full diffeomorphism test."""
    return a.collision_key == b.collision_key


def hodge_equal(a: WallInvariants, b: WallInvariants) -> bool:
    """For Wall-diffeomorphic threefolds: equal Hodge numbers iff equal k.

    Relies on the strict monotonicity of f(k) = k(k^2 - m) for m < 0; the
    quadric family (m >= 0) is excluded because nothing else is
    diffeomorphic to it.
    """
    if not are_diffeomorphic_wall(a, b):
        raise DomainError("Hodge comparison assumes Wall-diffeomorphic inputs")
    if a.m >= 0:
        raise DomainError("m >= 0 happens only for the quadric family; test undefined")
    return a.k == b.k


@dataclass(frozen=True)
class ThreefoldHodge:
    """Middle-degree Hodge data of a complete-intersection threefold."""

    h03: int
    h12: int
    b3: int
    chiO: int


def ci3_hodge(w: WallInvariants, d: int) -> ThreefoldHodge:
    """Hodge numbers from Wall data: chi(O) = k(k^2-m)d/48, h03 = 1 - chi(O),
    b3 = 4 - e, h12 = b3/2 - h03.

    d is passed explicitly so the formula can run on externally supplied
    invariants.  Divisibility or negativity failures mean the input was not
    a genuine threefold.
    """
    t = w.k * (w.k * w.k - w.m) * d
    if t % 48:
        raise IntegrityError(f"48 does not divide k(k^2-m)d = {t}")
    chiO = t // 48
    h03 = 1 - chiO
    b3 = 4 - w.e
    if b3 < 0 or b3 % 2:
        raise IntegrityError(f"b3 = 4 - e = {b3} must be even and nonnegative")
    h12 = b3 // 2 - h03
    if h03 < 0 or h12 < 0:
        raise IntegrityError(f"negative Hodge number: h03 = {h03}, h12 = {h12}")
    return ThreefoldHodge(h03=h03, h12=h12, b3=b3, chiO=chiO)
