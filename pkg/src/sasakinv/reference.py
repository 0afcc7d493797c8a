"""Recorded reference values shared by the verification command and the tests.

One source of truth: the five-row fixed-c2 surface tuple for
q in {2,3,4,6,8}, and the six multidegrees of the known Wall-collision
pairs of complete-intersection threefolds with their (d, m, e, k).
"""

SURFACE_TUPLE_Q = (2, 3, 4, 6, 8)
SURFACE_TUPLE_N = 21_740_924_188

# q -> (p, c1^2, d(c1)); all rows share c2 = 3n
SURFACE_TUPLE_ROWS = {
    2: (869_636_968, 39_133_663_488, 1),
    3: (339_701_941, 48_917_079_288, 1),
    4: (179_677_060, 53_364_086_388, 1),
    6: (75_228_112, 57_549_504_600, 5),
    8: (41_098_156, 59_551_226_028, 1),
}

# multidegree -> (d, m, e, k)
KNOWN_WALL_ROWS = {
    (70, 16, 16, 14, 7, 6): (10_536_960, -5_683, -7_767_425_433_600, -119),
    (56, 49, 8, 6, 5, 4, 4): (10_536_960, -5_683, -7_767_425_433_600, -121),
    (88, 28, 19, 14, 6, 6): (23_595_264, -9_147, -35_445_749_391_360, -151),
    (76, 56, 11, 7, 6, 6, 2): (23_595_264, -9_147, -35_445_749_391_360, -153),
    (84, 29, 25, 25, 18, 7): (191_835_000, -9_510, -384_536_710_530_000, -178),
    (60, 58, 49, 9, 5, 5, 5): (191_835_000, -9_510, -384_536_710_530_000, -180),
}

KNOWN_COLLISION_PAIRS = (
    ((70, 16, 16, 14, 7, 6), (56, 49, 8, 6, 5, 4, 4)),
    ((88, 28, 19, 14, 6, 6), (76, 56, 11, 7, 6, 6, 2)),
    ((84, 29, 25, 25, 18, 7), (60, 58, 49, 9, 5, 5, 5)),
)
