from fractions import Fraction

import pytest

from lagverify.laguerre import ValuationProfile, valuation_profile
from lagverify.newton import (
    DIVISIBILITY,
    LEADING,
    SLOPE,
    build_polygon,
    excluded_degree_range,
    ffl_check,
    lower_hull,
    rightmost_slope,
)


def prof(p, vals):
    return ValuationProfile.from_values(p, vals)


def test_hull_drops_point_above_chord():
    poly = lower_hull([(0, 0), (1, 2), (2, 3)])
    assert poly.vertices == ((0, 0), (2, 3))
    assert poly.slopes == [Fraction(3, 2)]


def test_hull_of_all_zero_profile():
    poly = build_polygon(prof(2, [0, 0, 0, 0]))
    assert poly.vertices == ((0, 0), (3, 0))
    assert poly.slopes == [0]


def test_hull_of_g1_2_3_at_2():
    # points (i, nu_2(c_{n-i})) = (0,0), (1,3), (2,2)
    poly = build_polygon(valuation_profile(2, (2, 3)))
    assert poly.vertices == ((0, 0), (2, 2))
    assert poly.final_slope() == 1


def test_hull_slopes_strictly_increase():
    poly = lower_hull([(0, 5), (1, 3), (2, 1), (3, 0), (4, 0), (5, 2), (6, 6)])
    assert poly.vertices == ((0, 5), (2, 1), (3, 0), (4, 0), (5, 2), (6, 6))
    assert all(a < b for a, b in zip(poly.slopes, poly.slopes[1:]))
    assert poly.height_at(1) == 3 and poly.height_at(3) == 0


def test_rightmost_slope_examples():
    assert rightmost_slope(prof(2, [2, 3, 0])) == 1
    assert rightmost_slope(prof(2, [0, 0, 0])) == 0


def test_rightmost_slope_g1_6_3():
    # nu_2 profile [6, 7, 3, 5, 2, 3, 0]; the steepest chord ends at j = 2
    p = valuation_profile(2, (6, 3))
    assert rightmost_slope(p) == Fraction(3, 2)
    assert build_polygon(p).final_slope() == Fraction(3, 2)


def test_rightmost_slope_requires_unit_leading():
    with pytest.raises(ValueError):
        rightmost_slope(prof(2, [3, 1]))
    with pytest.raises(ValueError):
        rightmost_slope(prof(2, [0]))


def test_ffl_6_3_linear_fails_on_slope():
    out = ffl_check(valuation_profile(2, (6, 3)), 0, 1)
    assert not out.holds
    assert out.violated == SLOPE
    assert out.witness_j == 2 and out.witness_slope == Fraction(3, 2)


def test_ffl_boundary_is_strict():
    # slope exactly 1 with k = 1 must fail
    out = ffl_check(prof(2, [2, 3, 0]), 0, 1)
    assert not out.holds and out.violated == SLOPE and out.witness_slope == 1


def test_ffl_4_5_quadratic_stage_fails():
    out = ffl_check(valuation_profile(2, (4, 5)), 1, 2)
    assert not out.holds


def test_ffl_leading_coefficient():
    out = ffl_check(prof(3, [2, 1, 1]), 0, 1)
    assert out.violated == LEADING and out.witness_j == 2


def test_ffl_divisibility():
    out = ffl_check(prof(3, [1, 0, 1, 0]), 0, 1)
    assert out.violated == DIVISIBILITY and out.witness_j == 1
    # l = 2 only asks for p | c_0
    assert ffl_check(prof(3, [1, 0, 1, 0]), 2, 3).violated != DIVISIBILITY


def test_ffl_eisenstein_holds():
    out = ffl_check(prof(5, [1, 1, 1, 0]), 0, 1)
    assert out.holds and out.to_dict()["violated"] is None


def test_ffl_rejects_bad_interval():
    with pytest.raises(ValueError):
        ffl_check(prof(2, [1, 0]), 1, 1)


def test_excluded_degree_range():
    # Eisenstein at degree 4: slope 1/4, every factor degree excluded
    assert excluded_degree_range(prof(3, [1, 1, 1, 1, 0])) == (1, 3)
    assert excluded_degree_range(prof(3, [0, 0, 0])) is None
    # slope 1 leaves no k >= 1 with k * slope < 1
    assert excluded_degree_range(prof(3, [1, 0])) is None
    # p | c_0, c_1, c_2 and slope 1/3: degree 2 is excluded
    assert excluded_degree_range(prof(3, [1, 1, 1, 0, 0])) == (2, 2)
