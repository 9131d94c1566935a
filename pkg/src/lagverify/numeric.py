"""Exact integer and prime primitives.

Everything here is integer-only.  Factorial valuations go through Legendre's
formula so that ``n!`` is never materialized; the vectorized variants work on
``int64`` arrays and are what the valuation scans use at ``n`` near 10**6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np


class NotPrimeError(ValueError):
    pass


@dataclass(frozen=True)
class PrimeSieve:
    """All primes up to ``limit``, ascending."""

    limit: int
    primes: Tuple[int, ...] = field(repr=False)

    @classmethod
    def build(cls, limit: int) -> "PrimeSieve":
        if limit < 2:
            return cls(limit, ())
        flags = np.ones(limit + 1, dtype=bool)
        flags[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = False
        return cls(limit, tuple(int(p) for p in np.flatnonzero(flags)))

    def __contains__(self, m: int) -> bool:
        if m > self.limit:
            raise ValueError(f"{m} exceeds sieve limit {self.limit}")
        i = _bisect(self.primes, m)
        return i < len(self.primes) and self.primes[i] == m

    def count_upto(self, x: int) -> int:
        if x > self.limit:
            raise ValueError(f"{x} exceeds sieve limit {self.limit}")
        return _bisect(self.primes, x + 1)


def _bisect(seq, x):
    lo, hi = 0, len(seq)
    while lo < hi:
        mid = (lo + hi) // 2
        if seq[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


@lru_cache(maxsize=32)
def sieve(limit: int) -> PrimeSieve:
    return PrimeSieve.build(limit)


def primes_upto(limit: int) -> List[int]:
    return list(sieve(max(limit, 1)).primes)


def prime_pi(s: int) -> int:
    """Number of primes <= s."""
    if s < 0:
        raise ValueError("prime_pi needs s >= 0")
    if s < 2:
        return 0
    return sieve(s).count_upto(s)


def is_prime(m: int) -> bool:
    # trial division; magnitudes in this package stay well below 10**12
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0 or m % 3 == 0:
        return False
    d = 5
    while d * d <= m:
        if m % d == 0 or m % (d + 2) == 0:
            return False
        d += 6
    return True


def next_prime(m: int) -> int:
    """Smallest prime strictly greater than ``m``."""
    q = max(m + 1, 2)
    while not is_prime(q):
        q += 1
    return q


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")


def factorint_small(m: int) -> dict:
    """Prime factorization of a positive integer by trial division."""
    if m < 1:
        raise ValueError("factorint_small needs m >= 1")
    out = {}
    for d in (2, 3):
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
    d = 5
    while d * d <= m:
        for q in (d, d + 2):
            while m % q == 0:
                out[q] = out.get(q, 0) + 1
                m //= q
        d += 6
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def prime_factors(m: int) -> List[int]:
    return sorted(factorint_small(m))


def nu(p: int, m: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if m == 0:
        raise ValueError("valuation of 0 is infinite")
    m = abs(m)
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def nu_factorial(p: int, m: int) -> int:
    """nu_p(m!) by Legendre's formula."""
    _check_prime(p)
    if m < 0:
        raise ValueError("nu_factorial needs m >= 0")
    total = 0
    while m:
        m //= p
        total += m
    return total


def nu_factorial_array(p: int, m: np.ndarray) -> np.ndarray:
    """Elementwise Legendre valuation for a nonnegative int64 array.

    ``p`` is trusted to be prime; callers validate once per scan.
    """
    m = np.asarray(m, dtype=np.int64)
    total = np.zeros_like(m)
    q = m // p
    while q.any():
        total += q
        q //= p
    return total


def kummer_divides(p: int, n: int, s: int) -> bool:
    """True iff p divides C(n+s, s): adding n and s in base p carries."""
    # no carry can come in before the first one found, so digits add alone
    while n and s:
        if n % p + s % p >= p:
            return True
        n //= p
        s //= p
    return False


def is_perfect_square(m: int) -> Optional[int]:
    """Nonnegative square root of ``m`` if it is a perfect square, else None."""
    if m < 0:
        return None
    r = math.isqrt(m)
    return r if r * r == m else None


def factor_pairs(N: int) -> List[Tuple[int, int]]:
    """All (d1, d2) with d1 <= d2 and d1 * d2 == N, ascending in d1."""
    if N <= 0:
        raise ValueError("factor_pairs needs N >= 1")
    out = []
    d = 1
    while d * d <= N:
        if N % d == 0:
            out.append((d, N // d))
        d += 1
    return out


def divisors(N: int) -> List[int]:
    """Positive divisors of N (N >= 1), ascending, from its factorization."""
    divs = [1]
    for p, e in factorint_small(N).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
