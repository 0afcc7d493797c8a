"""One-shot verification of every recorded reference value.

Replays the five-row surface tuple, the six collision rows, and the
closed-form identity suite of the matched surface families for k = 1..100.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import pair_search
from .boothby_wang import ContactVerdict
from .horikawa import matched_pair
from .reference import SURFACE_TUPLE_N, SURFACE_TUPLE_Q, SURFACE_TUPLE_ROWS
from .surface_tuples import tuple_search


def verify_surface_tuple() -> list[str]:
    """Diff lines for the recorded five-row tuple; empty means clean."""
    diffs = []
    result = tuple_search(5, q_override=SURFACE_TUPLE_Q)
    if result.n != SURFACE_TUPLE_N:
        diffs.append(f"n = {result.n}, expected {SURFACE_TUPLE_N}")
    for row in result.rows:
        p, c1sq, c1_div = SURFACE_TUPLE_ROWS[row.q]
        for name, got, want in (
            ("p", row.p, p),
            ("c1sq", row.c1sq, c1sq),
            ("d(c1)", row.c1_div, c1_div),
        ):
            if got != want:
                diffs.append(f"q = {row.q}: {name} = {got}, expected {want}")
    if len(result.groups) != 5:
        diffs.append(f"{len(result.groups)} c1^2 groups, expected 5")
    return diffs


def verify_family_identities(kmax: int = 100) -> list[str]:
    """Diff lines for the matched-pair closed forms over k = 1..kmax."""
    diffs = []
    for k in range(1, kmax + 1):
        pair = matched_pair(k)
        x, z = pair.ci_surface, pair.cover_surface
        checks = (
            ("b2(X)", x.b2, 80 * k + 74),
            ("b2(Z)", z.b2, 80 * k + 74),
            ("h02(X)", x.h02, 10 * k + 6),
            ("h02(Z)", z.h02, 8 * k + 6),
            ("h11(X)", x.h11, 60 * k + 62),
            ("h11(Z)", z.h11, 64 * k + 62),
            ("d(c1(X))", x.c1_div, math.gcd(k, 2)),
            ("spin(Z)", z.spin, False),
            (
                "verdict",
                pair.contact_obstruction,
                ContactVerdict.INEQUIVALENT if k % 2 == 0 else ContactVerdict.INCONCLUSIVE,
            ),
        )
        for name, got, want in checks:
            if got != want:
                diffs.append(f"k = {k}: {name} = {got}, expected {want}")
    return diffs


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    surface_tuple: tuple[str, ...]
    known_pairs: tuple[str, ...]
    family_identities: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def verify_all(kmax: int = 100) -> VerificationReport:
    surface = tuple(verify_surface_tuple())
    pairs = tuple(pair_search.verify_known_pairs().mismatches)
    family = tuple(verify_family_identities(kmax))
    return VerificationReport(
        ok=not (surface or pairs or family),
        surface_tuple=surface,
        known_pairs=pairs,
        family_identities=family,
    )
