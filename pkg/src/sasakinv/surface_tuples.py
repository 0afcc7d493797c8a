"""Tuples of simply connected general-type surfaces with equal c2 and distinct c1^2.

The surfaces are smooth hypersurfaces of bidegree (p, 3q) in CP^1 x CP^2.
Fixing c2 = 3n across several values of q amounts to the congruence system
n = 6q(1-q) mod (3q-1)^2, solvable by the Chinese Remainder Theorem once
the numbers 3q-1 are pairwise coprime.  For a fixed c1^2 the defining
relation is cubic in q, so 3k values of q always realise at least k
distinct values of c1^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import complete_intersection as ci
from .cohomology import AmbientSpace
from .errors import DomainError, IntegrityError

P1XP2 = AmbientSpace((1, 2))


@dataclass(frozen=True)
class SurfaceInvariants:
    """Chern and Hodge data of a simply connected algebraic surface.

    c1_coeffs are the coefficients of c1 in a fixed integral basis of the
    relevant part of H^2 (the ambient generators for hypersurfaces, the
    pulled-back base classes for double covers); c1_div is their gcd, 0
    exactly for c1 = 0.
    """

    c1_coeffs: tuple[int, ...]
    c1sq: int
    c2: int
    chiO: int
    b2: int
    h02: int
    h11: int
    spin: bool
    c1_div: int
    ample_canonical: bool

    def __post_init__(self) -> None:
        if 12 * self.chiO != self.c1sq + self.c2:
            raise IntegrityError("Noether formula violated: chi(O) != (c1^2 + c2)/12")
        if self.b2 != self.c2 - 2:
            raise IntegrityError("b2 != c2 - 2 on a simply connected surface")
        if self.h02 != self.chiO - 1 or self.h02 < 0:
            raise IntegrityError("h02 must equal chi(O) - 1 and be nonnegative")
        if self.h11 != self.b2 - 2 * self.h02 or self.h11 < 0:
            raise IntegrityError("h11 must equal b2 - 2*h02 and be nonnegative")
        if self.c1_div != math.gcd(*(abs(c) for c in self.c1_coeffs)):
            raise IntegrityError("c1_div must be the gcd of the c1 coefficients")

    @classmethod
    def from_chern(
        cls,
        c1_coeffs: Iterable[int],
        c1sq: int,
        c2: int,
        spin: bool,
        ample_canonical: bool,
    ) -> "SurfaceInvariants":
        """Derive the Betti/Hodge fields from (c1, c1^2, c2)."""
        coeffs = tuple(int(c) for c in c1_coeffs)
        if (c1sq + c2) % 12:
            raise IntegrityError(f"12 does not divide c1^2 + c2 = {c1sq + c2}")
        chiO = (c1sq + c2) // 12
        b2 = c2 - 2
        h02 = chiO - 1
        return cls(
            c1_coeffs=coeffs,
            c1sq=c1sq,
            c2=c2,
            chiO=chiO,
            b2=b2,
            h02=h02,
            h11=b2 - 2 * h02,
            spin=spin,
            c1_div=math.gcd(*(abs(c) for c in coeffs)),
            ample_canonical=ample_canonical,
        )


@dataclass(frozen=True)
class HypersurfaceP1P2:
    """Smooth hypersurface of bidegree (p, 3q) in CP^1 x CP^2."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 1:
            raise DomainError(f"need p, q >= 1, got ({self.p}, {self.q})")

    @property
    def bidegree(self) -> tuple[int, int]:
        return (self.p, 3 * self.q)

    def invariants(self) -> SurfaceInvariants:
        return surface_invariants(self.p, self.q)


def surface_invariants(p: int, q: int) -> SurfaceInvariants:
    """Closed-form invariants of the bidegree-(p, 3q) hypersurface.

    c1 = (2-p)x1 + (3-3q)x2, c1^2 = 9(q-1)(3pq-p-4q),
    c2 = 3(p(3q-1)^2 - 6q(q-1)); the canonical bundle is ample for p > 2,
    q > 1.
    """
    if p < 1 or q < 1:
        raise DomainError(f"need p, q >= 1, got ({p}, {q})")
    a1, a2 = 2 - p, 3 - 3 * q
    return SurfaceInvariants.from_chern(
        c1_coeffs=(a1, a2),
        c1sq=9 * (q - 1) * (3 * p * q - p - 4 * q),
        c2=3 * (p * (3 * q - 1) ** 2 - 6 * q * (q - 1)),
        spin=a1 % 2 == 0 and a2 % 2 == 0,
        ample_canonical=p > 2 and q > 1,
    )


def hypersurface_spec(p: int, q: int) -> ci.CompleteIntersectionSpec:
    """The bidegree-(p, 3q) hypersurface as a complete-intersection spec."""
    return ci.CompleteIntersectionSpec(P1XP2, ((p, 3 * q),))


def pipeline_cross_check(p: int, q: int) -> bool:
    """True iff the closed forms match the adjunction pipeline exactly."""
    inv = surface_invariants(p, q)
    rep = ci.chern_numbers(hypersurface_spec(p, q))
    return (
        rep.c1 == P1XP2.linear_form(inv.c1_coeffs)
        and rep.c1sq == inv.c1sq
        and rep.c2 == inv.c2
    )


def crt_smallest_positive(pairs: Sequence[tuple[int, int]]) -> int:
    """Smallest n with 1 <= n <= prod(moduli) solving every congruence.

    pairs are (residue, modulus); moduli must be pairwise coprime and >= 2.
    """
    residue, modulus = 0, 1
    for r, m in pairs:
        r, m = int(r), int(m)
        if m < 2:
            raise DomainError(f"modulus {m} < 2")
        if math.gcd(modulus, m) != 1:
            raise DomainError("moduli must be pairwise coprime")
        t = ((r - residue) * pow(modulus, -1, m)) % m
        residue += modulus * t
        modulus *= m
    return residue if residue else modulus


def coprime_q_selection(count: int, even_only: bool = False) -> list[int]:
    """Greedy ascending scan for q >= 2 with pairwise coprime values 3q-1.

    A candidate is accepted iff 3q-1 is coprime to every accepted value;
    even_only restricts to even q (making all 3q-1 and 3-3q odd).
    """
    if count < 1:
        raise DomainError("need count >= 1")
    chosen: list[int] = []
    moduli: list[int] = []
    q = 2
    while len(chosen) < count:
        v = 3 * q - 1
        if (not even_only or q % 2 == 0) and all(math.gcd(v, w) == 1 for w in moduli):
            chosen.append(q)
            moduli.append(v)
        q += 1
    return chosen


@dataclass(frozen=True)
class TupleRow:
    """One surface of a fixed-c2 tuple: bidegree (p, 3q) with c1^2 and d(c1)."""

    q: int
    p: int
    c1sq: int
    c1_div: int

    def surface(self) -> HypersurfaceP1P2:
        return HypersurfaceP1P2(self.p, self.q)

    def invariants(self) -> SurfaceInvariants:
        return surface_invariants(self.p, self.q)


def tuple_row(q: int, n: int) -> TupleRow:
    """The unique row for q once c2 = 3n is fixed.

    p = (n + 6q(q-1)) / (3q-1)^2 and
    c1^2 = 9(q-1)(n - 2q(3q+1)) / (3q-1), both divisions exact when n
    satisfies the congruence for q.
    """
    s = 3 * q - 1
    num = n + 6 * q * (q - 1)
    if num % (s * s):
        raise IntegrityError(f"n = {n} violates the congruence for q = {q}")
    p = num // (s * s)
    t = 9 * (q - 1) * (n - 2 * q * (3 * q + 1))
    if t % s:
        raise IntegrityError(f"{s} does not divide 9(q-1)(n - 2q(3q+1)) at q = {q}")
    c1sq = t // s
    inv = surface_invariants(p, q)
    if inv.c1sq != c1sq:
        raise IntegrityError(f"c1^2 closed forms disagree at (p, q) = ({p}, {q})")
    if inv.c2 != 3 * n:
        raise IntegrityError(f"c2 != 3n at (p, q) = ({p}, {q})")
    return TupleRow(q=q, p=p, c1sq=c1sq, c1_div=inv.c1_div)


@dataclass(frozen=True)
class TupleSearchResult:
    """All rows sharing c2 = 3n, grouped by exact c1^2 equality."""

    q_list: tuple[int, ...]
    n: int
    rows: tuple[TupleRow, ...]
    groups: tuple[tuple[TupleRow, ...], ...]

    @property
    def c2(self) -> int:
        return 3 * self.n


def tuple_search(k: int, q_override: Optional[Iterable[int]] = None) -> TupleSearchResult:
    """Build a fixed-c2 family realising at least k distinct values of c1^2.

    By default 3k values of q are selected greedily, which guarantees the
    bound; an override list reproduces specific recorded families.
    """
    if k < 1:
        raise DomainError("need k >= 1")
    if q_override is not None:
        q_list = sorted(int(q) for q in q_override)
        if not q_list or q_list[0] < 1 or len(set(q_list)) != len(q_list):
            raise DomainError("q override must be distinct integers >= 1")
        moduli = [3 * q - 1 for q in q_list]
        for i, v in enumerate(moduli):
            if any(math.gcd(v, w) != 1 for w in moduli[:i]):
                raise DomainError("override values 3q-1 must be pairwise coprime")
    else:
        q_list = coprime_q_selection(3 * k)
    n = crt_smallest_positive(
        [(6 * q * (1 - q), (3 * q - 1) ** 2) for q in q_list]
    )
    rows = tuple(tuple_row(q, n) for q in q_list)
    by_c1sq: dict[int, list[TupleRow]] = {}
    for row in rows:
        by_c1sq.setdefault(row.c1sq, []).append(row)
    groups = tuple(tuple(g) for _, g in sorted(by_c1sq.items()))
    if 3 * len(groups) < len(q_list):
        # each c1^2 value solves a cubic in q, hence occurs at most 3 times
        raise IntegrityError("fewer c1^2 groups than the cubic bound allows")
    if len(groups) < k and q_override is None:
        raise IntegrityError(f"greedy selection produced {len(groups)} < {k} groups")
    if len(groups) < k:
        raise DomainError(
            f"override yields {len(groups)} distinct c1^2 values, needed {k}"
        )
    return TupleSearchResult(
        q_list=tuple(q_list), n=n, rows=rows, groups=groups
    )


def distinct_tuple(result: TupleSearchResult, k: int) -> list[HypersurfaceP1P2]:
    """One representative per c1^2 group: k surfaces with equal c2 and
    pairwise distinct c1^2 (hence pairwise distinct Hodge numbers)."""
    if len(result.groups) < k:
        raise DomainError(
            f"result has {len(result.groups)} groups, cannot pick {k} representatives"
        )
    return [group[0].surface() for group in result.groups[:k]]
