"""Sets and claims exactly as printed, kept verbatim for diffing.

Nothing here is used to steer a computation; these constants are only
compared against computed results.
"""

from typing import Dict, FrozenSet, Tuple

Pair = Tuple[int, int]

#: T1 in printed order, duplicate (16, 19) included
PRINTED_T1: Tuple[Pair, ...] = (
    (2, 3), (6, 3), (4, 5), (2, 7), (4, 7), (8, 11), (72, 11), (8, 13),
    (3, 15), (2, 15), (10, 15), (4, 15), (12, 15),
    (8, 15), (16, 17), (272, 17), (16, 19), (6, 23), (4, 23), (16, 23),
    (16, 24), (16, 26), (8, 27), (216, 29),
    (16, 19), (786600, 25), (786600, 26),
)

PRINTED_X: Tuple[Pair, ...] = (
    (6, 3), (4, 5), (8, 11), (72, 11), (3, 15), (10, 15), (4, 15), (12, 15),
    (8, 15), (16, 17),
    (272, 17), (8, 27), (16, 29), (786600, 25), (786600, 26),
)

#: (n, k, s) triples where a degree-k factor is not ruled out by earlier work
LEMMA3_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (4, 2, 7), (4, 2, 23), (9, 2, 19), (9, 2, 47), (16, 2, 14), (16, 2, 34),
    (16, 2, 89), (9, 3, 47), (16, 3, 19), (10, 5, 4),
)

#: the subset assumed away by hypothesis in the s <= 30 theorem
THEOREM_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (4, 2, 7), (4, 2, 23), (9, 2, 19), (16, 2, 14), (16, 3, 19), (10, 5, 4),
)

#: pairs checked directly in the corollary before invoking the theorem
COROLLARY_DIRECT: Tuple[Pair, ...] = (
    (4, 7), (4, 23), (9, 19), (16, 14), (16, 19), (10, 4),
)
COROLLARY_QUADRATIC: Pair = (2, 7)
COROLLARY_OPEN: Tuple[Pair, ...] = ((786600, 25), (786600, 26))

#: printed claims about x^2 -+ 2(1+s) b1 x -+ (2+s)(1+s)/2, keyed by s:
#: the set of b1 for which some sign choice is reducible
LEMMA5_CLAIMS: Dict[int, FrozenSet[int]] = {
    3: frozenset(),
    7: frozenset({0}),
    15: frozenset(),
}
#: the one reducible member named, as (s, sign of constant, b1)
LEMMA5_NAMED_EXCEPTION = (7, -1, 0)  # x^2 - 36

#: s = 3, constant +10: the worked factor pairs and their sums
LEMMA5_S3_PAIRS: Tuple[Pair, ...] = ((1, 40), (2, 20), (4, 10), (5, 8))
LEMMA5_S3_SUMS: Tuple[int, ...] = (41, 22, 14, 13)


def as_set(pairs) -> FrozenSet[Pair]:
    return frozenset(tuple(p) for p in pairs)
