"""Reducibility of the quadratic family x^2 - A*b1*x + sign*C over all b1.

A = 2(1+s).  Two normalizations of the constant magnitude are carried:
``printed`` uses C = (2+s)(1+s)/2 and ``derived`` uses C = (2+s)(1+s),
which is the constant term of g1(x, 2, s) itself.

x^2 - A*b*x + sign*C factors over Z iff A^2 b^2 - 4*sign*C = m^2 for an
integer m >= 0, i.e. iff a factorization of 4C into two integers of the
same parity produces a multiple of 2A.  Since 4C is fixed, the set of
exceptional b1 is finite and is found from the factor pairs of 4C.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .numeric import factor_pairs, is_perfect_square

PRINTED = "printed"
DERIVED = "derived"
MODES = (PRINTED, DERIVED)


@dataclass(frozen=True)
class QuadraticFamily:
    s: int
    sign: int
    mode: str = PRINTED

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("s must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.mode not in MODES:
            raise ValueError(f"unknown normalization mode {self.mode!r}")

    @property
    def linear_unit_coeff(self) -> int:
        return 2 * (1 + self.s)

    @property
    def constant_magnitude(self) -> int:
        c = (2 + self.s) * (1 + self.s)
        return c // 2 if self.mode == PRINTED else c

    @property
    def constant(self) -> int:
        return self.sign * self.constant_magnitude

    def member(self, b1: int) -> Tuple[int, int, int]:
        """Ascending coefficients (c0, c1, c2) of the member at b1."""
        return (self.constant, -self.linear_unit_coeff * b1, 1)

    def label(self) -> str:
        sgn = "+" if self.sign > 0 else "-"
        return f"s={self.s} {self.mode} {sgn}{self.constant_magnitude}"


@dataclass(frozen=True, order=True)
class QuadraticWitness:
    b1: int
    m: int
    r1: int
    r2: int

    def to_dict(self) -> dict:
        return {"b1": self.b1, "m": self.m, "roots": [self.r1, self.r2]}


def is_reducible_quadratic(B: int, C: int) -> Optional[Tuple[int, int]]:
    """Integer roots (r1 >= r2) of x^2 + Bx + C, or None if irreducible."""
    m = is_perfect_square(B * B - 4 * C)
    if m is None:
        return None
    # B and m share parity whenever B^2 - 4C = m^2
    return (-B + m) // 2, (-B - m) // 2


def _witness(fam: QuadraticFamily, b1: int) -> Optional[QuadraticWitness]:
    A = fam.linear_unit_coeff
    roots = is_reducible_quadratic(-A * b1, fam.constant)
    if roots is None:
        return None
    m = roots[0] - roots[1]
    return QuadraticWitness(b1, m, roots[0], roots[1])


@dataclass(frozen=True)
class PairTrace:
    d1: int
    d2: int
    combined: int  # d1 + d2 for sign +1, d2 - d1 for sign -1; equals 2*A*|b1|
    parity_ok: bool
    b1: Optional[int]

    def to_dict(self) -> dict:
        return {
            "pair": [self.d1, self.d2],
            "combined": self.combined,
            "parity_ok": self.parity_ok,
            "b1": self.b1,
        }


def factor_pair_trace(fam: QuadraticFamily) -> List[PairTrace]:
    """One entry per factor pair of 4C, as in the hand computation.

    For sign +1: (A*b - m)(A*b + m) = 4C, so d1 + d2 = 2*A*b.
    For sign -1: (m - A*b)(m + A*b) = 4C, so d2 - d1 = 2*A*|b|.
    """
    A = fam.linear_unit_coeff
    out = []
    for d1, d2 in factor_pairs(4 * fam.constant_magnitude):
        combined = d1 + d2 if fam.sign > 0 else d2 - d1
        parity_ok = (d1 - d2) % 2 == 0
        b1 = combined // (2 * A) if parity_ok and combined % (2 * A) == 0 else None
        out.append(PairTrace(d1, d2, combined, parity_ok, b1))
    return out


def exceptional_b1(fam: QuadraticFamily) -> frozenset:
    """Every b1 in Z making the family member reducible, with root witnesses."""
    found = set()
    for tr in factor_pair_trace(fam):
        if tr.b1 is None:
            continue
        for b in {tr.b1, -tr.b1}:
            w = _witness(fam, b)
            if w is None:  # pragma: no cover - the algebra guarantees a square
                raise AssertionError(f"factor pair {tr} did not give a square")
            found.add(w)
    return frozenset(found)


def brute_force_b1(fam: QuadraticFamily, bound: int) -> frozenset:
    """Exceptional b1 with |b1| <= bound by direct discriminant tests."""
    found = set()
    for b in range(-bound, bound + 1):
        w = _witness(fam, b)
        if w is not None:
            found.add(w)
    return frozenset(found)


def all_families(svals=(3, 7, 15)) -> List[QuadraticFamily]:
    return [
        QuadraticFamily(s, sign, mode)
        for s in svals
        for mode in MODES
        for sign in (1, -1)
    ]
