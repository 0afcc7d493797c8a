"""Exact-arithmetic invariants of complete intersections and the circle
bundles over them: Chern and Hodge numbers, Wall diffeomorphism data,
fixed-c2 surface tuples via the Chinese Remainder Theorem, Smale-Barden
classification of Boothby-Wang total spaces, and an exhaustive
Wall-collision search."""

from .boothby_wang import (
    BaseSurfaceData,
    BoothbyWangReport,
    ContactVerdict,
    HodgeDiamond,
    LinkSign,
    SmaleBardenType,
    bw_classify,
    ci3_diamond,
    hamilton_obstruction,
    higher_dim_pair,
    kunneth_hodge,
    link_sign,
    seven_dim_pair,
)
from .cohomology import AmbientSpace, CohomologyClass
from .complete_intersection import (
    ChernReport,
    CompleteIntersectionSpec,
    ThreefoldHodge,
    WallInvariants,
    are_diffeomorphic_wall,
    chern_numbers,
    ci3_hodge,
    hodge_equal,
    integrate_over_ci,
    tangent_chern_class,
    threefold_spec,
    wall_closed_forms,
    wall_invariants,
)
from .errors import DomainError, IntegrityError
from .horikawa import (
    HirzebruchClass,
    MatchedSurfacePair,
    NonSpinRow,
    hirzebruch_ample,
    hirzebruch_intersect,
    horikawa_invariants,
    horikawa_spin,
    matched_pair,
    nonspin_tuple,
    xk_invariants,
    xk_spec,
)
from .pair_search import (
    CollisionGroup,
    CollisionMember,
    SearchBounds,
    collisions_among,
    enumerate_multidegrees,
    search_collisions,
    verify_known_pairs,
)
from .surface_tuples import (
    HypersurfaceP1P2,
    SurfaceInvariants,
    TupleRow,
    TupleSearchResult,
    coprime_q_selection,
    crt_smallest_positive,
    distinct_tuple,
    pipeline_cross_check,
    surface_invariants,
    tuple_row,
    tuple_search,
)

__version__ = "0.1.0"
