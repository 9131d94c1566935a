"""The integer polynomials g1(x, n, s) and their p-adic valuation profiles.

g1(x) = sum_j c_j x^j with c_j = C(n+s-j, n-j) * n!/j!, stored ascending.
Valuation profiles are computed in closed form from Legendre's formula, so
they stay cheap at degrees where the coefficients themselves have millions
of digits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, List

import numpy as np

from .numeric import _check_prime, nu_factorial, nu_factorial_array

#: largest degree for which literal coefficient vectors are built
MATERIALIZE_CAP = 10**4


class TooLargeToMaterialize(ValueError):
    """Raised when a literal coefficient vector would be unreasonably large.

    Use :func:`valuation_profile` instead; every pipeline decision only
    needs valuations.
    """


@dataclass(frozen=True, order=True)
class LaguerrePair:
    n: int
    s: int

    def __post_init__(self):
        if self.n < 1 or self.s < 1:
            raise ValueError(f"need n >= 1 and s >= 1, got ({self.n}, {self.s})")

    def as_list(self) -> List[int]:
        return [self.n, self.s]


def _pair(pair) -> LaguerrePair:
    return pair if isinstance(pair, LaguerrePair) else LaguerrePair(*pair)


def g1_coefficients(pair, cap: int = MATERIALIZE_CAP) -> List[int]:
    """Exact ascending coefficients c_0..c_n of g1(x, n, s)."""
    pair = _pair(pair)
    n, s = pair.n, pair.s
    if n > cap:
        raise TooLargeToMaterialize(
            f"g1({n}, {s}) is too large to materialize; use valuation_profile"
        )
    coeffs = [0] * (n + 1)
    # falling product n!/j! built from the top down
    tail = 1
    for j in range(n, -1, -1):
        coeffs[j] = comb(n + s - j, n - j) * tail
        tail *= j if j else 1
    return coeffs


def g1_valuation(p: int, pair, j: int) -> int:
    """nu_p(c_j) via Legendre's formula, no big integers involved."""
    pair = _pair(pair)
    n, s = pair.n, pair.s
    if not 0 <= j <= n:
        raise IndexError(f"coefficient index {j} outside 0..{n}")
    return (
        nu_factorial(p, n + s - j)
        - nu_factorial(p, n - j)
        - nu_factorial(p, s)
        + nu_factorial(p, n)
        - nu_factorial(p, j)
    )


@dataclass(frozen=True)
class ValuationProfile:
    """nu_p(c_j) for j = 0..n, indexed by coefficient degree."""

    p: int
    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, j):
        return self.values[j]

    def tolist(self) -> List[int]:
        return [int(v) for v in self.values]

    @classmethod
    def from_values(cls, p: int, values) -> "ValuationProfile":
        arr = np.asarray(values, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a valuation profile needs at least one value")
        return cls(p, arr)


def iter_valuations(p: int, pair) -> Iterator[int]:
    """Yield nu_p(c_j) for j = 0, 1, ..., n incrementally.

    Each step updates the three moving factorial valuations by nu_p of a
    single integer, so consumers that stop early pay only for what they read.
    """
    _check_prime(p)
    pair = _pair(pair)
    n, s = pair.n, pair.s
    fixed = nu_factorial(p, n) - nu_factorial(p, s)
    top = nu_factorial(p, n + s)  # nu_p((n+s-j)!)
    mid = nu_factorial(p, n)  # nu_p((n-j)!)
    low = 0  # nu_p(j!)
    for j in range(n + 1):
        yield top - mid + fixed - low
        if j == n:
            break
        top -= _nu_int(p, n + s - j)
        mid -= _nu_int(p, n - j)
        low += _nu_int(p, j + 1)


def _nu_int(p: int, m: int) -> int:
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def valuation_profile(p: int, pair) -> ValuationProfile:
    """Full profile as an int64 array (vectorized Legendre)."""
    _check_prime(p)
    pair = _pair(pair)
    n, s = pair.n, pair.s
    j = np.arange(n + 1, dtype=np.int64)
    vals = (
        nu_factorial_array(p, n + s - j)
        - nu_factorial_array(p, n - j)
        - nu_factorial(p, s)
        + nu_factorial(p, n)
        - nu_factorial_array(p, j)
    )
    return ValuationProfile(p, vals)


def coefficient_small_factors(pair, j: int) -> List[int]:
    """Small integers whose product is c_j, for j close to n.

    c_j = C(n+s-j, s) * (j+1)(j+2)...n, which lets callers factor c_j
    without building it when n - j is small.
    """
    pair = _pair(pair)
    n, s = pair.n, pair.s
    if not 0 <= j <= n:
        raise IndexError(f"coefficient index {j} outside 0..{n}")
    if n - j > 64:
        raise ValueError("only meant for coefficients near the leading one")
    return [comb(n + s - j, s)] + list(range(j + 1, n + 1))
