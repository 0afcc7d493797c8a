"""Two surface families with matched Betti numbers but different Hodge numbers.

One side: complete intersections of bidegrees (2,5) and (k,1) in
CP^1 x CP^3.  Other side: minimal general-type double covers of Hirzebruch
surfaces branched over B = 6*Delta + 2(2i+3)F, taken at i = 8k+2 so the
second Betti numbers agree.  Circle bundles over the pair give two Sasaki
structures on the same 5-manifold; the divisibility of c1 separates their
contact structures for even k.

Also here: the non-spin variant of the fixed-c2 tuple construction, which
restricts to even q so that c1 stays odd and a Kahler class with even
second coefficient twists the total space away from the spin case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import complete_intersection as ci
from .boothby_wang import ContactVerdict
from .cohomology import AmbientSpace
from .errors import DomainError, IntegrityError
from .surface_tuples import (
    HypersurfaceP1P2,
    SurfaceInvariants,
    coprime_q_selection,
    surface_invariants,
    tuple_search,
)

P1XP3 = AmbientSpace((1, 3))


@dataclass(frozen=True)
class HirzebruchClass:
    """a*Delta + b*F on the Hirzebruch surface Sigma_i: Delta is the section
    with self-intersection -i, F the fibre."""

    i: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.i < 0:
            raise DomainError("Hirzebruch degree must be nonnegative")


def hirzebruch_intersect(i: int, u: HirzebruchClass, v: HirzebruchClass) -> int:
    """Intersection number from Delta^2 = -i, Delta.F = 1, F^2 = 0."""
    if u.i != i or v.i != i:
        raise DomainError("classes live on different Hirzebruch surfaces")
    return -i * u.a * v.a + u.a * v.b + v.a * u.b


def hirzebruch_ample(i: int, u: HirzebruchClass) -> bool:
    """Nakai-Moishezon on Sigma_i: a*Delta + b*F is ample iff a > 0 and b > a*i."""
    if u.i != i:
        raise DomainError("class lives on a different Hirzebruch surface")
    return u.a > 0 and u.b > u.a * i


def branch_class(i: int) -> HirzebruchClass:
    """Branch locus 6*Delta + (4i+6)*F of the double cover."""
    return HirzebruchClass(i, 6, 4 * i + 6)


def half_branch_class(i: int) -> HirzebruchClass:
    return HirzebruchClass(i, 3, 2 * i + 3)


def horikawa_spin(i: int) -> tuple[bool, int]:
    """Spin test for the double cover of Sigma_i (i even branch setup).

    The cover is spin iff half the branch class is divisible by 2; pairing
    it with the fibre gives the witness 3, which is odd, so the answer is
    always (False, 3).
    """
    fibre = HirzebruchClass(i, 0, 1)
    witness = hirzebruch_intersect(i, half_branch_class(i), fibre)
    return witness % 2 == 0, witness


def horikawa_invariants(i: int) -> SurfaceInvariants:
    """Invariants of the genus-2-fibred double cover of Sigma_i:
    c1^2 = 2i+4, c2 = 10i+56, chi(O) = i+5.

    c1 = -pullback(Delta + (i+1)F); its pairing with the pulled-back fibre
    is -2, so d(c1) divides 2, and the non-spin cover forces d(c1) = 1.
    """
    if i < 1:
        raise DomainError("need i >= 1")
    spin, witness = horikawa_spin(i)
    if witness % 2 == 0:
        raise IntegrityError("half branch class paired with the fibre must be odd")
    return SurfaceInvariants.from_chern(
        c1_coeffs=(-1, -(i + 1)),
        c1sq=2 * i + 4,
        c2=10 * i + 56,
        spin=spin,
        ample_canonical=hirzebruch_ample(i, HirzebruchClass(i, 1, i + 1)),
    )


def xk_spec(k: int) -> ci.CompleteIntersectionSpec:
    """The (2,5), (k,1) complete intersection surface in CP^1 x CP^3."""
    return ci.CompleteIntersectionSpec(P1XP3, ((2, 5), (k, 1)))


def xk_invariants(k: int) -> SurfaceInvariants:
    """Closed forms c1 = -k*x1 - 2*x2, c1^2 = 40k+8, c2 = 80k+76,
    cross-checked against the adjunction pipeline."""
    if k < 1:
        raise DomainError("need k >= 1")
    inv = SurfaceInvariants.from_chern(
        c1_coeffs=(-k, -2),
        c1sq=40 * k + 8,
        c2=80 * k + 76,
        spin=k % 2 == 0,
        ample_canonical=True,
    )
    rep = ci.chern_numbers(xk_spec(k))
    if (
        rep.c1 != P1XP3.linear_form(inv.c1_coeffs)
        or rep.c1sq != inv.c1sq
        or rep.c2 != inv.c2
    ):
        raise IntegrityError(f"closed forms disagree with the ring pipeline at k = {k}")
    return inv


@dataclass(frozen=True)
class MatchedSurfacePair:
    """The k-th pair: complete intersection vs double cover at i = 8k+2.

    Equal b2 and c2 put both circle-bundle total spaces on the same
    connected sum of S^2 x S^3's; the Hodge numbers always differ, and the
    canonical divisibilities (gcd(k,2) vs 1) differ exactly for even k.
    """

    k: int
    ci_surface: SurfaceInvariants
    cover_surface: SurfaceInvariants
    hodge_differ: bool
    contact_obstruction: ContactVerdict

    @property
    def sphere_bundle_summands(self) -> int:
        """n with total space #n(S^2 x S^3)."""
        return self.ci_surface.b2 - 1


def matched_pair(k: int) -> MatchedSurfacePair:
    if k < 1:
        raise DomainError("need k >= 1")
    xk = xk_invariants(k)
    zk = horikawa_invariants(8 * k + 2)
    if xk.b2 != zk.b2 or xk.c2 != zk.c2:
        raise IntegrityError("families must match in b2 and c2 at i = 8k+2")
    return MatchedSurfacePair(
        k=k,
        ci_surface=xk,
        cover_surface=zk,
        hodge_differ=(xk.h02, xk.h11) != (zk.h02, zk.h11),
        contact_obstruction=(
            ContactVerdict.INEQUIVALENT
            if xk.c1_div != zk.c1_div
            else ContactVerdict.INCONCLUSIVE
        ),
    )


@dataclass(frozen=True)
class NonSpinRow:
    """A non-spin surface from the even-q tuple plus the ambient Kahler
    class used as the Euler class of the circle bundle."""

    surface: HypersurfaceP1P2
    invariants: SurfaceInvariants
    euler_class: tuple[int, int]

    @property
    def c1_mod2(self) -> tuple[int, ...]:
        return tuple(c % 2 for c in self.invariants.c1_coeffs)

    @property
    def euler_mod2(self) -> tuple[int, ...]:
        return tuple(c % 2 for c in self.euler_class)


def nonspin_tuple(k: int, euler_coeffs: tuple[int, int] = (1, 2)) -> list[NonSpinRow]:
    """k non-spin general-type surfaces with equal c2, distinct Hodge
    numbers, and a common Kahler class whose mod-2 vector differs from
    every c1.

    Restricting to even q keeps 3q-1 and 3-3q odd; the Euler class
    a*x1 + b*x2 needs positive coprime coefficients with b even so that it
    stays primitive while disagreeing with c1 mod 2.  The even-q pool grows
    until k distinct c1^2 groups have ample-canonical representatives;
    3k values always suffice for the group count, and larger pools push
    every p past the ampleness threshold.
    """
    if k < 1:
        raise DomainError("need k >= 1")
    a, b = (int(c) for c in euler_coeffs)
    if a <= 0 or b <= 0:
        raise DomainError("euler class coefficients must be positive")
    if b % 2:
        raise DomainError("second euler coefficient must be even")
    if math.gcd(a, b) != 1:
        raise DomainError("euler class coefficients must be coprime")
    for count in range(k, 3 * k + 2):
        q_list = coprime_q_selection(count, even_only=True)
        result = tuple_search(1, q_override=q_list)
        rows = []
        for group in result.groups:
            row = next(
                (r for r in group if surface_invariants(r.p, r.q).ample_canonical),
                None,
            )
            if row is None:
                continue
            inv = surface_invariants(row.p, row.q)
            if inv.spin:
                raise IntegrityError("even q must give an odd c1 coefficient")
            ns = NonSpinRow(
                surface=HypersurfaceP1P2(row.p, row.q),
                invariants=inv,
                euler_class=(a, b),
            )
            if ns.c1_mod2 == ns.euler_mod2:
                raise IntegrityError("euler class fails to differ from c1 mod 2")
            rows.append(ns)
        if len(rows) >= k:
            return rows[:k]
    raise IntegrityError("even-q pool exhausted without k ample representatives")
