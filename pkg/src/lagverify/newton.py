"""p-adic Newton polygons and the Filaseta-Finch-Leidy factor exclusion test.

Orientation: for h(x) = sum_j c_j x^j of degree n, the polygon is the lower
convex hull of P_i = (i, nu_p(c_{n-i})), i = 0..n.  Slopes increase left to
right and the rightmost edge, ending at (n, nu_p(c_0)), has the largest
slope.  All slope arithmetic is exact (Fraction / integer cross products).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from .laguerre import ValuationProfile

Slope = Fraction

LEADING = "leading-coefficient"
DIVISIBILITY = "divisibility"
SLOPE = "slope"


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: Tuple[Tuple[int, int], ...]

    @property
    def edges(self) -> List[Tuple[Tuple[int, int], Tuple[int, int], Slope]]:
        out = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            out.append(((x0, y0), (x1, y1), Fraction(y1 - y0, x1 - x0)))
        return out

    @property
    def slopes(self) -> List[Slope]:
        return [e[2] for e in self.edges]

    def final_slope(self) -> Slope:
        if len(self.vertices) < 2:
            raise ValueError("a single point has no edges")
        return self.slopes[-1]

    def height_at(self, x: int) -> Fraction:
        for (x0, y0), (x1, y1), m in self.edges:
            if x0 <= x <= x1:
                return y0 + m * (x - x0)
        raise ValueError(f"{x} outside polygon")


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points) -> NewtonPolygon:
    """Lower convex hull of lattice points sorted by x (monotone chain)."""
    hull: List[Tuple[int, int]] = []
    for pt in points:
        # pop while the turn is not strictly counter-clockwise; collinear
        # middle points are dropped so that slopes strictly increase
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return NewtonPolygon(tuple(hull))


def build_polygon(profile: ValuationProfile) -> NewtonPolygon:
    vals = profile.tolist()
    n = len(vals) - 1
    return lower_hull([(i, vals[n - i]) for i in range(n + 1)])


def rightmost_slope(profile: ValuationProfile) -> Slope:
    """max over 0 < j <= n of (v_0 - v_j) / j, exact.

    Equals the slope of the final hull edge whenever v_n == 0.  The max is
    taken by a vectorized pairwise tournament with integer cross products.
    """
    v = profile.values
    n = len(v) - 1
    if n < 1:
        raise ValueError("profile of a constant has no edges")
    if v[n] != 0:
        raise ValueError("rightmost_slope needs nu_p(leading coefficient) == 0")
    num = v[0] - v[1:]
    den = np.arange(1, n + 1, dtype=np.int64)
    while len(num) > 1:
        if len(num) % 2:
            num = np.append(num, num[-1])
            den = np.append(den, den[-1])
        a_n, b_n = num[0::2], num[1::2]
        a_d, b_d = den[0::2], den[1::2]
        take_a = a_n * b_d >= b_n * a_d
        num = np.where(take_a, a_n, b_n)
        den = np.where(take_a, a_d, b_d)
    return Fraction(int(num[0]), int(den[0]))


@dataclass(frozen=True)
class FFLOutcome:
    """Result of the factor exclusion test for one prime.

    ``holds`` means no factor degree in [l+1, k] is possible.  On failure,
    ``violated`` names the first hypothesis that broke, and ``witness`` gives
    the offending coefficient index (plus the slope for slope failures).
    """

    p: int
    l: int
    k: int
    holds: bool
    violated: Optional[str] = None
    witness_j: Optional[int] = None
    witness_slope: Optional[Slope] = field(default=None)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "l": self.l,
            "k": self.k,
            "holds": self.holds,
            "violated": self.violated,
            "witness_j": self.witness_j,
            "witness_slope": None if self.witness_slope is None else str(self.witness_slope),
        }


def ffl_check(profile: ValuationProfile, l: int, k: int) -> FFLOutcome:
    """Decide the three hypotheses of the exclusion lemma on one profile.

    (i) p does not divide the leading coefficient, (ii) p divides c_j for
    every j < n - l, (iii) the rightmost edge slope is < 1/k.  The slope
    test is equivalent to k * (v_0 - v_j) < j for every j in 1..n, which is
    checked in integers; the witness is the first j that breaks it.
    """
    if not k > l >= 0:
        raise ValueError(f"need k > l >= 0, got l={l}, k={k}")
    v = profile.values
    n = len(v) - 1
    p = profile.p
    if v[n] != 0:
        return FFLOutcome(p, l, k, False, LEADING, n)
    shallow = np.flatnonzero(v[: max(n - l, 0)] < 1)
    if shallow.size:
        return FFLOutcome(p, l, k, False, DIVISIBILITY, int(shallow[0]))
    j = np.arange(1, n + 1, dtype=np.int64)
    bad = np.flatnonzero(k * (v[0] - v[1:]) >= j)
    if bad.size:
        jj = int(bad[0]) + 1
        return FFLOutcome(p, l, k, False, SLOPE, jj, Fraction(int(v[0] - v[jj]), jj))
    return FFLOutcome(p, l, k, True)


def excluded_degree_range(profile: ValuationProfile) -> Optional[Tuple[int, int]]:
    """Largest interval [l+1, k] the exclusion lemma rules out, if any.

    l is the least value for which the divisibility hypothesis holds and k
    the largest integer with rightmost slope < 1/k.
    """
    v = profile.values
    n = len(v) - 1
    if n < 1 or v[n] != 0:
        return None
    nondiv = np.flatnonzero(v < 1)
    t = int(nondiv[0])  # first index with p not dividing c_t; t <= n
    l = n - t
    slope = rightmost_slope(profile)
    if slope <= 0:
        k = n
    else:
        # largest k with k * slope < 1
        k = -(-slope.denominator // slope.numerator) - 1
        k = min(k, n)
    if k <= l:
        return None
    return l + 1, k
