"""Candidate pairs (n, s) and the two exclusion stages.

Stages, for s <= s_max:

* T   all n >= n_min whose prime-power parts are all <= s and such that
      every prime p | n divides C(n+s, s);
* T1  members of T at which no admissible prime certifies the absence of a
      linear factor (exclusion test with l = 0, k = 1);
* T2  the n = 2 slice of T1, handed to the quadratic family analysis;
* set-aside  members of T1 with floor(n/2) <= 1 < n (n = 3), where the
      l = 1 interval [2, floor(n/2)] is empty;
* T3  the rest of T1;
* T4  members of T3 at which some admissible prime certifies that no factor
      has degree in [2, floor(n/2)];
* X   T4 together with the set-aside pairs.

A prime is admissible for (l, k) when it divides every c_j with j < n - l.
Such primes are exactly the prime divisors of gcd(c_0, ..., c_{n-l-1}), and
all of them divide c_{n-l-1}, which is a product of small integers.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from . import baseline
from .laguerre import LaguerrePair, coefficient_small_factors, valuation_profile
from .newton import FFLOutcome, ffl_check
from .numeric import factorint_small, kummer_divides, prime_factors, prime_pi, primes_upto
from .quadratic import PRINTED, QuadraticFamily, exceptional_b1

Pair = Tuple[int, int]

DEFAULT_NCAP = 10**7
NCAP_ENV = "LAGVERIFY_NCAP"


def default_ncap() -> int:
    raw = os.environ.get(NCAP_ENV)
    if raw is None:
        return DEFAULT_NCAP
    value = int(raw)
    if value < 2:
        raise ValueError(f"{NCAP_ENV} must be >= 2")
    return value


@dataclass(frozen=True)
class PipelineConfig:
    s_max: int = 30
    n_cap: int = DEFAULT_NCAP
    mode: str = PRINTED
    n_min: int = 2
    exceptional_triples: Tuple[Tuple[int, int, int], ...] = baseline.LEMMA3_TRIPLES
    jobs: int = 1

    def __post_init__(self):
        if self.s_max < 1:
            raise ValueError("s_max must be >= 1")
        if self.n_cap < 2:
            raise ValueError("n_cap must be >= 2")
        if self.n_min < 2:
            raise ValueError("n_min must be >= 2")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def to_dict(self) -> dict:
        return {
            "s_max": self.s_max,
            "n_cap": self.n_cap,
            "mode": self.mode,
            "n_min": self.n_min,
            "exceptional_triples": [list(t) for t in self.exceptional_triples],
        }


def lemma2_bound(s: int) -> int:
    """s ** pi(s), the bound on n when a linear factor exists."""
    if s < 1:
        raise ValueError("s must be >= 1")
    return s ** prime_pi(s)


def smooth_numbers(s: int) -> List[int]:
    """Every n >= 1 whose prime-power parts p^nu_p(n) are all <= s."""
    out = [1]
    for p in primes_upto(s):
        powers = [1]
        while powers[-1] * p <= s:
            powers.append(powers[-1] * p)
        out = [m * q for m in out for q in powers]
    return sorted(out)


def smooth_candidates(s: int, n_cap: int, n_min: int = 2) -> List[int]:
    return [n for n in smooth_numbers(s) if n_min <= n <= n_cap]


def condition4_filter(candidates: Sequence[int], s: int) -> List[int]:
    """Keep n iff every prime p | n divides C(n+s, s)."""
    return [n for n in candidates if all(kummer_divides(p, n, s) for p in prime_factors(n))]


def admissible_primes(pair: Pair, l: int) -> List[int]:
    """Primes dividing c_{n-l-1}; candidates for the divisibility hypothesis."""
    n, s = pair
    if l >= n:
        return []
    found = set()
    for m in coefficient_small_factors(LaguerrePair(n, s), n - l - 1):
        found.update(factorint_small(m))
    return sorted(found)


def exclusion_scan(pair: Pair, l: int, k: int) -> Tuple[Optional[int], List[FFLOutcome]]:
    """Try admissible primes in ascending order, stopping at the first success.

    Returns the certifying prime (or None) and every outcome computed.
    """
    outcomes = []
    for p in admissible_primes(pair, l):
        out = ffl_check(valuation_profile(p, pair), l, k)
        outcomes.append(out)
        if out.holds:
            return p, outcomes
    return None, outcomes


@dataclass
class SurvivorRecord:
    pair: Pair
    sets: List[str] = field(default_factory=lambda: ["T"])
    stage1: List[FFLOutcome] = field(default_factory=list)
    stage2: List[FFLOutcome] = field(default_factory=list)
    quadratic: Optional[dict] = None
    notes: List[str] = field(default_factory=list)

    @property
    def stage(self) -> str:
        return self.sets[-1]

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "sets": list(self.sets),
            "stage": self.stage,
            "stage1": [o.to_dict() for o in self.stage1],
            "stage2": [o.to_dict() for o in self.stage2],
            "quadratic": self.quadratic,
            "notes": list(self.notes),
        }


def _stage1_worker(pair: Pair):
    return exclusion_scan(pair, 0, 1)


def _stage2_worker(pair: Pair):
    n, _ = pair
    return exclusion_scan(pair, 1, n // 2)


def _map(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items, chunksize=8))
    return [fn(x) for x in items]


def _key(pair: Pair):
    return (pair[1], pair[0])


def filter_T1(T: Sequence[Pair], config: PipelineConfig, records: Dict[Pair, SurvivorRecord]) -> List[Pair]:
    """Members of T where no admissible prime excludes a linear factor."""
    results = _map(_stage1_worker, list(T), config.jobs)
    T1 = []
    for pair, (prime, outcomes) in zip(T, results):
        rec = records[pair]
        rec.stage1 = outcomes
        if prime is None:
            rec.sets.append("T1")
            T1.append(pair)
    return T1


def quadratic_findings(s: int, mode: str) -> dict:
    """Exceptional b1 for both constant signs of the n = 2 family at s."""
    out = {}
    for sign in (1, -1):
        fam = QuadraticFamily(s, sign, mode)
        ws = sorted(exceptional_b1(fam))
        out["+" if sign > 0 else "-"] = [w.to_dict() for w in ws]
    return {"mode": mode, "exceptions": out}


def assemble_X(T1: Sequence[Pair], config: PipelineConfig, records: Dict[Pair, SurvivorRecord]):
    T2, aside, T3 = [], [], []
    for pair in T1:
        n, s = pair
        if n == 2:
            T2.append(pair)
            records[pair].sets.append("T2")
            records[pair].quadratic = quadratic_findings(s, config.mode)
        elif n // 2 <= 1:
            aside.append(pair)
            records[pair].notes.append("interval [2, floor(n/2)] empty; kept without the l = 1 stage")
        else:
            T3.append(pair)
            records[pair].sets.append("T3")
    results = _map(_stage2_worker, T3, config.jobs)
    T4 = []
    for pair, (prime, outcomes) in zip(T3, results):
        rec = records[pair]
        rec.stage2 = outcomes
        if prime is not None:
            rec.sets.append("T4")
            T4.append(pair)
    X = sorted(T4 + aside, key=_key)
    for pair in X:
        records[pair].sets.append("X")
    return T2, aside, T3, T4, X


@dataclass
class PipelineResult:
    config: PipelineConfig
    T: List[Pair]
    T1: List[Pair]
    T2: List[Pair]
    set_aside: List[Pair]
    T3: List[Pair]
    T4: List[Pair]
    X: List[Pair]
    deferred: List[Pair]
    records: Dict[Pair, SurvivorRecord]

    @property
    def partial(self) -> bool:
        return bool(self.deferred)

    def sets(self) -> Dict[str, List[Pair]]:
        return {
            "T": self.T, "T1": self.T1, "T2": self.T2, "set_aside": self.set_aside,
            "T3": self.T3, "T4": self.T4, "X": self.X, "deferred": self.deferred,
        }


def enumerate_T(config: PipelineConfig) -> Tuple[List[Pair], List[Pair]]:
    """(T within the cap, T members above the cap), both sorted by (s, n)."""
    T, deferred = [], []
    for s in range(1, config.s_max + 1):
        cands = [n for n in smooth_numbers(s) if n >= config.n_min]
        for n in condition4_filter(cands, s):
            (T if n <= config.n_cap else deferred).append((n, s))
    return T, deferred


def run_pipeline(config: PipelineConfig) -> PipelineResult:
    T, deferred = enumerate_T(config)
    records = {pair: SurvivorRecord(pair) for pair in T}
    for pair in deferred:
        records[pair] = SurvivorRecord(pair, notes=["above n_cap; not scanned"])
    triples = {(n, s): (n, k, s) for n, k, s in config.exceptional_triples}
    for pair, rec in records.items():
        if pair in triples:
            rec.notes.append(f"exceptional triple {triples[pair]} assumed away by hypothesis")
    T1 = filter_T1(T, config, records)
    T2, aside, T3, T4, X = assemble_X(T1, config, records)
    return PipelineResult(config, T, T1, T2, aside, T3, T4, X, deferred, records)


def satisfies_conditions(n: int, s: int) -> bool:
    """Independent re-check of membership in T with a literal binomial."""
    a0 = comb(n + s, s)
    for p, e in factorint_small(n).items():
        if p > s or p**e > s or a0 % p:
            return False
    return True
