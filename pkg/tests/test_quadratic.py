import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lagverify.quadratic import (
    DERIVED,
    PRINTED,
    QuadraticFamily,
    all_families,
    brute_force_b1,
    exceptional_b1,
    factor_pair_trace,
    is_reducible_quadratic,
)

x = sympy.Symbol("x")


def b_values(fam):
    return sorted(w.b1 for w in exceptional_b1(fam))


@pytest.mark.parametrize("B, C, roots", [(0, -36, (6, -6)), (8, 20, None), (-16, -36, (18, -2)), (-7, 12, (4, 3))])
def test_is_reducible_quadratic(B, C, roots):
    assert is_reducible_quadratic(B, C) == roots


def test_family_coefficients():
    fam = QuadraticFamily(3, 1, PRINTED)
    assert fam.linear_unit_coeff == 8
    assert fam.constant == 10
    assert fam.member(2) == (10, -16, 1)
    assert QuadraticFamily(3, -1, DERIVED).constant == -20


def test_family_validation():
    with pytest.raises(ValueError):
        QuadraticFamily(3, 0)
    with pytest.raises(ValueError):
        QuadraticFamily(3, 1, "other")


def test_s3_printed_trace():
    trace = factor_pair_trace(QuadraticFamily(3, 1, PRINTED))
    assert [(t.d1, t.d2) for t in trace] == [(1, 40), (2, 20), (4, 10), (5, 8)]
    assert [t.combined for t in trace] == [41, 22, 14, 13]
    assert all(t.b1 is None for t in trace)
    assert b_values(QuadraticFamily(3, 1, PRINTED)) == []


def test_s7_printed_negative_constant():
    found = {w.b1: (w.r1, w.r2) for w in exceptional_b1(QuadraticFamily(7, -1, PRINTED))}
    assert found == {0: (6, -6), 1: (18, -2), -1: (2, -18)}


def test_s7_derived_is_empty():
    assert b_values(QuadraticFamily(7, 1, DERIVED)) == []
    assert b_values(QuadraticFamily(7, -1, DERIVED)) == []


def test_other_derived_findings():
    # x^2 -+ 8x - 20 = (x -+ 10)(x +- 2) and x^2 -+ 64x - 272 = (x -+ 68)(x +- 4)
    assert b_values(QuadraticFamily(3, -1, DERIVED)) == [-1, 1]
    assert b_values(QuadraticFamily(15, -1, DERIVED)) == [-2, 2]
    assert b_values(QuadraticFamily(15, -1, PRINTED)) == []


def test_all_families_agree_with_brute_force():
    fams = all_families()
    assert len(fams) == 12
    for fam in fams:
        assert exceptional_b1(fam) == brute_force_b1(fam, 10**3)


def test_witnesses_against_sympy():
    for fam in all_families():
        A, C = fam.linear_unit_coeff, fam.constant
        for b in range(-5, 6):
            factors = sympy.factor_list(x**2 - A * b * x + C)[1]
            reducible = len(factors) > 1 or factors[0][1] > 1
            assert reducible == (b in b_values(fam)), (fam.label(), b)


@given(st.integers(min_value=1, max_value=200), st.sampled_from([1, -1]), st.sampled_from([PRINTED, DERIVED]))
@settings(max_examples=60, deadline=None)
def test_solver_matches_brute_force_any_s(s, sign, mode):
    fam = QuadraticFamily(s, sign, mode)
    solved = exceptional_b1(fam)
    # every exceptional b1 satisfies 2A|b| <= 4C + 1
    bound = (4 * fam.constant_magnitude + 1) // (2 * fam.linear_unit_coeff) + 1
    assert solved == brute_force_b1(fam, bound)
