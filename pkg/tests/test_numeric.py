import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lagverify.numeric import (
    NotPrimeError,
    divisors,
    factor_pairs,
    factorint_small,
    is_perfect_square,
    is_prime,
    kummer_divides,
    next_prime,
    nu,
    nu_factorial,
    nu_factorial_array,
    prime_pi,
    primes_upto,
    sieve,
)


@pytest.mark.parametrize("s, expected", [(1, 0), (10, 4), (30, 10), (0, 0), (2, 1)])
def test_prime_pi(s, expected):
    assert prime_pi(s) == expected


def test_sieve_matches_sympy():
    assert primes_upto(10_000) == list(sympy.primerange(2, 10_001))
    sv = sieve(500)
    assert 499 in sv and 500 not in sv
    assert sv.count_upto(100) == 25


def test_is_prime_and_next_prime():
    assert [m for m in range(-3, 30) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert next_prime(1009) == 1013
    assert next_prime(1) == 2


@pytest.mark.parametrize("p, m, expected", [(2, 10, 8), (3, 9, 4), (7, 5, 0), (5, 0, 0)])
def test_nu_factorial_examples(p, m, expected):
    assert nu_factorial(p, m) == expected


def test_nu_factorial_rejects_composite():
    with pytest.raises(NotPrimeError):
        nu_factorial(4, 10)
    with pytest.raises(ValueError):
        nu_factorial(2, -1)


def test_nu_factorial_array_matches_scalar():
    m = np.arange(0, 3000, 7)
    for p in (2, 3, 13, 101):
        assert nu_factorial_array(p, m).tolist() == [nu_factorial(p, int(x)) for x in m]


def test_nu():
    assert nu(2, 60480) == 6
    assert nu(3, -81) == 4
    with pytest.raises(ValueError):
        nu(5, 0)


@pytest.mark.parametrize("p, n, s, expected", [(2, 1, 1, True), (2, 2, 1, False), (3, 3, 3, False)])
def test_kummer_examples(p, n, s, expected):
    assert kummer_divides(p, n, s) is expected


@pytest.mark.parametrize("m, root", [(400, 20), (40, None), (0, 0), (1, 1), (-4, None), (10**40, 10**20)])
def test_is_perfect_square(m, root):
    assert is_perfect_square(m) == root


@pytest.mark.parametrize("N, pairs", [
    (40, [(1, 40), (2, 20), (4, 10), (5, 8)]),
    (1, [(1, 1)]),
    (12, [(1, 12), (2, 6), (3, 4)]),
    (36, [(1, 36), (2, 18), (3, 12), (4, 9), (6, 6)]),
])
def test_factor_pairs(N, pairs):
    assert factor_pairs(N) == pairs


def test_factor_pairs_rejects_nonpositive():
    with pytest.raises(ValueError):
        factor_pairs(0)


@given(st.integers(min_value=1, max_value=10**9))
@settings(max_examples=200, deadline=None)
def test_factorint_small_roundtrip(m):
    fac = factorint_small(m)
    assert math.prod(p**e for p, e in fac.items()) == m
    assert all(is_prime(p) for p in fac)


@given(st.integers(min_value=1, max_value=10**6))
@settings(max_examples=100, deadline=None)
def test_divisors_match_sympy(m):
    assert divisors(m) == sympy.divisors(m)
