"""Dense polynomial arithmetic over GF(p) on int64 arrays.

Polynomials are ascending coefficient arrays with a nonzero last entry; the
zero polynomial is an empty array.  The prime must stay below 2**20 so that
a convolution of two reduced polynomials of degree < 2**20 cannot overflow
int64 (each term < 2**40, at most 2**20 terms).
"""

from __future__ import annotations

from typing import Dict, List, Sequence

import numpy as np

MAX_PRIME = 1 << 20


def reduce(coeffs: Sequence[int], p: int) -> np.ndarray:
    """Reduce big-integer coefficients mod p, then trim."""
    return trim(np.array([c % p for c in coeffs], dtype=np.int64))


def trim(a: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(a)
    return a[: nz[-1] + 1] if nz.size else a[:0]


def deg(a: np.ndarray) -> int:
    return len(a) - 1


def monic(a: np.ndarray, p: int) -> np.ndarray:
    inv = pow(int(a[-1]), -1, p)
    return a * inv % p


def sub(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    n = max(len(a), len(b))
    out = np.zeros(n, dtype=np.int64)
    out[: len(a)] += a
    out[: len(b)] -= b
    return trim(out % p)


def mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if not len(a) or not len(b):
        return a[:0]
    return trim(np.convolve(a, b) % p)


def rem(a: np.ndarray, f: np.ndarray, p: int) -> np.ndarray:
    """a mod f for monic f."""
    a = a.copy()
    df = len(f) - 1
    lead_free = f[:-1]
    for i in range(len(a) - 1, df - 1, -1):
        q = a[i]
        if q:
            a[i - df : i] = (a[i - df : i] - q * lead_free) % p
        a[i] = 0
    return trim(a[:df] if len(a) > df else a)


def divmod_(a: np.ndarray, b: np.ndarray, p: int):
    """Quotient and remainder for arbitrary nonzero b."""
    if not len(b):
        raise ZeroDivisionError("division by the zero polynomial")
    inv = pow(int(b[-1]), -1, p)
    a = a.copy()
    db = len(b) - 1
    if len(a) <= db:
        return a[:0], trim(a)
    q = np.zeros(len(a) - db, dtype=np.int64)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            a[i - db : i + 1] = (a[i - db : i + 1] - c * b) % p
    return trim(q), trim(a[:db])


def gcd(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Monic gcd (empty array if both are zero)."""
    while len(b):
        a, b = b, divmod_(a, b, p)[1]
    return monic(a, p) if len(a) else a


def derivative(a: np.ndarray, p: int) -> np.ndarray:
    if len(a) <= 1:
        return a[:0]
    return trim(a[1:] * np.arange(1, len(a), dtype=np.int64) % p)


def powmod(base: np.ndarray, e: int, f: np.ndarray, p: int) -> np.ndarray:
    result = np.array([1], dtype=np.int64)
    base = rem(base, f, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), f, p)
    return result


def evaluate_all(a: np.ndarray, p: int) -> np.ndarray:
    """Values of a at every residue 0..p-1 (vectorized Horner)."""
    x = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in a[::-1]:
        acc = (acc * x + c) % p
    return acc


def is_squarefree(f: np.ndarray, p: int) -> bool:
    d = derivative(f, p)
    if not len(d):
        return False
    return len(gcd(f, d, p)) == 1


def _frobenius_matrix(f: np.ndarray, p: int) -> np.ndarray:
    """Row i holds x^(i*p) mod f, padded to deg f columns."""
    n = len(f) - 1
    xp = powmod(np.array([0, 1], dtype=np.int64), p, f, p)
    Q = np.zeros((n, n), dtype=np.int64)
    row = np.array([1], dtype=np.int64)
    for i in range(n):
        Q[i, : len(row)] = row
        row = rem(mul(row, xp, p), f, p)
    return Q


def _apply_frobenius(h: np.ndarray, Q: np.ndarray, p: int) -> np.ndarray:
    """h(x)^p mod f == h(x^p) mod f, computed as h @ Q."""
    n = Q.shape[0]
    padded = np.zeros(n, dtype=np.int64)
    padded[: len(h)] = h
    # each product < p^2 < 2**40 and n < 2**20 terms: no overflow
    return trim(padded @ Q % p)


def distinct_degree(f: np.ndarray, p: int) -> Dict[int, int]:
    """Map degree d -> number of irreducible factors of degree d.

    ``f`` must be monic and squarefree mod p.
    """
    if not 0 < p < MAX_PRIME:
        raise ValueError(f"prime {p} outside supported range")
    n = len(f) - 1
    if n < 1:
        return {}
    out: Dict[int, int] = {}
    Q = _frobenius_matrix(f, p)
    x = np.array([0, 1], dtype=np.int64)
    h = x.copy()
    rest = f
    d = 0
    while 2 * (d + 1) <= len(rest) - 1:
        d += 1
        h = _apply_frobenius(h, Q, p)
        g = gcd(rest, sub(h, x, p), p)
        if len(g) > 1:
            out[d] = (len(g) - 1) // d
            # h stays reduced mod f, which is still correct modulo rest | f
            rest = divmod_(rest, g, p)[0]
    if len(rest) > 1:
        dr = len(rest) - 1
        out[dr] = out.get(dr, 0) + 1
    return out


def degree_multiset(f: np.ndarray, p: int) -> List[int]:
    dd = distinct_degree(f, p)
    return sorted(d for d, cnt in dd.items() for _ in range(cnt))
