"""Irreducibility certificates for explicit integer polynomials.

Irreducibility is meant over Q: the content of a polynomial is ignored.
A certificate is assembled from independently checkable facts, tried in
this order:

1. a quadratic with negative discriminant;
2. rational roots, found exhaustively (reducible with an explicit factor if
   any exist, otherwise degrees 1 and n-1 are ruled out);
3. factor-degree patterns modulo a fixed ladder of good primes, intersected
   as subset-sum sets;
4. Newton-polygon exclusion intervals at small primes;
5. otherwise the verdict is Unresolved.

No step factors the polynomial over Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import polymodp as gf
from .laguerre import ValuationProfile
from .newton import excluded_degree_range
from .numeric import divisors, is_prime, next_prime, nu, primes_upto

IRREDUCIBLE = "Irreducible"
REDUCIBLE = "Reducible"
UNRESOLVED = "Unresolved"

LADDER_START = 1009
SMALL_CONSTANT = 10**12
DEFAULT_BUDGET = 12
NEWTON_PRIMES = tuple(primes_upto(100))


class BadPrime(ValueError):
    """The prime divides the leading coefficient or f is not squarefree mod p."""


@dataclass(frozen=True)
class PolynomialZ:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        if not c:
            raise ValueError("the zero polynomial is not allowed")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "PolynomialZ":
        g = self.content()
        sign = -1 if self.lc < 0 else 1
        return PolynomialZ(tuple(sign * c // g for c in self.coeffs))

    def derivative(self) -> "PolynomialZ":
        if self.degree == 0:
            raise ValueError("derivative of a constant")
        return PolynomialZ(tuple(j * c for j, c in enumerate(self.coeffs) if j))


def exact_divide(f: Sequence[int], g: Sequence[int]) -> Optional[List[int]]:
    """Quotient q with f == g*q over Z, or None when g does not divide f."""
    f = list(f)
    g = list(g)
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return None if any(f) else []
    q = [0] * (len(f) - dg)
    for i in range(len(f) - 1, dg - 1, -1):
        c, r = divmod(f[i], g[-1])
        if r:
            return None
        q[i - dg] = c
        for t in range(dg + 1):
            f[i - dg + t] -= c * g[t]
    if any(f[:dg]):
        return None
    return q


# ---------------------------------------------------------------- roots


def prime_ladder(start: int = LADDER_START) -> Iterator[int]:
    p = start if is_prime(start) else next_prime(start)
    while True:
        yield p
        p = next_prime(p)


def _hensel_lift(coeffs: Sequence[int], r: int, p: int, modulus_goal: int) -> int:
    """Lift a simple root r mod p to a root mod p^e >= modulus_goal."""
    f = PolynomialZ(tuple(coeffs))
    df = f.derivative()
    mod = p
    while mod < modulus_goal:
        mod = mod * mod
        fr = f(r) % mod
        dfr = df(r) % mod
        r = (r - fr * pow(dfr, -1, mod)) % mod
    return r


def integer_roots(f: PolynomialZ) -> List[int]:
    """All integer roots of f, ascending.

    Small constant terms are handled by testing every divisor.  Otherwise
    roots mod a good prime are found by exhaustion, lifted p-adically past
    twice the Cauchy root bound, and confirmed by exact evaluation.
    """
    if not isinstance(f, PolynomialZ):
        f = PolynomialZ(tuple(f))
    coeffs = list(f.coeffs)
    roots = set()
    if coeffs[0] == 0:
        roots.add(0)
        while coeffs[0] == 0:
            coeffs.pop(0)
    g = PolynomialZ(tuple(coeffs))
    if g.degree == 0:
        return sorted(roots)
    c0 = abs(coeffs[0])
    if c0 <= SMALL_CONSTANT:
        for d in divisors(c0):
            for r in (d, -d):
                if g(r) == 0:
                    roots.add(r)
        return sorted(roots)
    bound = 1 + max(abs(c) for c in coeffs[:-1]) // abs(coeffs[-1]) + 1
    for p in _good_primes(g, limit=64):
        fp = gf.reduce(coeffs, p)
        residues = np.flatnonzero(gf.evaluate_all(fp, p) == 0)
        for r in residues:
            lifted = _hensel_lift(coeffs, int(r), p, 2 * bound + 1)
            mod = p
            while mod < 2 * bound + 1:
                mod *= mod
            cand = lifted if lifted <= mod // 2 else lifted - mod
            if g(cand) == 0:
                roots.add(cand)
        return sorted(roots)
    raise BadPrime("no good prime found; polynomial is likely not squarefree")


def _good_primes(f: PolynomialZ, limit: int) -> Iterator[int]:
    tried = 0
    for p in prime_ladder():
        if tried >= limit:
            return
        tried += 1
        if f.lc % p == 0:
            continue
        fp = gf.reduce(f.coeffs, p)
        if gf.is_squarefree(fp, p):
            yield p


def rational_roots(f: PolynomialZ) -> List[Tuple[int, int]]:
    """Rational roots a/b (b > 0, reduced) via the integer roots of lc^(n-1) f(y/lc)."""
    n, lc = f.degree, f.lc
    if abs(lc) == 1:
        return [(r, 1) for r in integer_roots(f)]
    scaled = [c * lc ** (n - 1 - j) for j, c in enumerate(f.coeffs[:-1])] + [1]
    out = []
    for y in integer_roots(PolynomialZ(tuple(scaled))):
        a, b = y, lc
        if b < 0:
            a, b = -a, -b
        g = gcd(a, b)
        out.append((a // g, b // g))
    return sorted(set(out))


# ---------------------------------------------------------------- patterns


def modp_degree_multiset(f: PolynomialZ, p: int) -> List[int]:
    """Degrees of the irreducible factors of f mod p, ascending."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.lc % p == 0:
        raise BadPrime(f"{p} divides the leading coefficient")
    fp = gf.reduce(f.coeffs, p)
    if not gf.is_squarefree(fp, p):
        raise BadPrime(f"f is not squarefree mod {p}")
    return gf.degree_multiset(gf.monic(fp, p), p)


def subset_sums(degrees: Iterable[int], n: int) -> int:
    """Bitmask of achievable subset sums (bit d set iff d is achievable)."""
    mask = 1
    full = (1 << (n + 1)) - 1
    for d in degrees:
        mask = (mask | (mask << d)) & full
    return mask


def mask_to_list(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def newton_exclusions(f: PolynomialZ, primes: Sequence[int] = NEWTON_PRIMES) -> List[dict]:
    """Degree intervals ruled out at each prime by the exclusion lemma."""
    n = f.degree
    out = []
    for p in primes:
        if f.lc % p == 0:
            continue
        # zero coefficients sit at infinite height; any value above every
        # real valuation plays that role in the hull
        vals = [nu(p, c) if c else n * 64 + 64 for c in f.coeffs]
        rng = excluded_degree_range(ValuationProfile.from_values(p, vals))
        if rng is not None:
            out.append({"p": p, "l": rng[0] - 1, "k": rng[1]})
    return out


def _exclusion_mask(n: int, l: int, k: int) -> int:
    mask = 0
    for d in range(l + 1, k + 1):
        mask |= 1 << d
        mask |= 1 << (n - d)
    return mask


# ---------------------------------------------------------------- certify


@dataclass
class IrredCertificate:
    verdict: str
    evidence: dict
    factor: Optional[List[int]] = None

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "evidence": self.evidence, "factor": self.factor}

    @classmethod
    def from_dict(cls, d: dict) -> "IrredCertificate":
        return cls(d["verdict"], d["evidence"], d.get("factor"))


def certify(f, budget: int = DEFAULT_BUDGET) -> IrredCertificate:
    if not isinstance(f, PolynomialZ):
        f = PolynomialZ(tuple(f))
    n = f.degree
    if n < 1:
        raise ValueError("certify needs degree >= 1")
    if n == 1:
        return IrredCertificate(IRREDUCIBLE, {"kind": "linear"})
    g = f.primitive()

    if n == 2:
        c, b, a = g.coeffs
        disc = b * b - 4 * a * c
        if disc < 0:
            return IrredCertificate(IRREDUCIBLE, {"kind": "negative-discriminant", "discriminant": disc})

    roots = rational_roots(g)
    if roots:
        a, b = roots[0]
        return IrredCertificate(
            REDUCIBLE,
            {"kind": "explicit-factor", "root": [a, b]},
            factor=[-a, b],
        )
    possible = (1 << (n + 1)) - 1
    possible &= ~((1 << 1) | (1 << (n - 1)))
    target = 1 | (1 << n)
    evidence: dict = {"kind": "degree-pattern-intersection", "no_rational_root": True, "patterns": []}

    used = 0
    for p in _good_primes(g, limit=budget * 8):
        if possible == target or used >= budget:
            break
        degs = modp_degree_multiset(g, p)
        used += 1
        evidence["patterns"].append({"p": p, "degrees": degs})
        possible &= subset_sums(degs, n)
    if possible != target:
        for ex in newton_exclusions(g):
            evidence.setdefault("newton", []).append(ex)
            possible &= ~_exclusion_mask(n, ex["l"], ex["k"])
            if possible == target:
                break
    if possible == target:
        return IrredCertificate(IRREDUCIBLE, evidence)
    evidence["possible_degrees"] = mask_to_list(possible)
    return IrredCertificate(UNRESOLVED, evidence)


def verify_certificate(f, cert: IrredCertificate) -> bool:
    """Re-derive every fact a certificate relies on."""
    if not isinstance(f, PolynomialZ):
        f = PolynomialZ(tuple(f))
    n = f.degree
    ev = cert.evidence
    if cert.verdict == REDUCIBLE:
        fac = cert.factor
        return fac is not None and 0 < len(fac) - 1 < n and exact_divide(f.coeffs, fac) is not None
    if cert.verdict != IRREDUCIBLE:
        return False
    kind = ev.get("kind")
    if kind == "linear":
        return n == 1
    g = f.primitive()
    if kind == "negative-discriminant":
        c, b, a = g.coeffs if n == 2 else (0, 0, 0)
        return n == 2 and b * b - 4 * a * c < 0
    if kind != "degree-pattern-intersection":
        return False
    possible = (1 << (n + 1)) - 1
    if ev.get("no_rational_root"):
        if rational_roots(g):
            return False
        possible &= ~((1 << 1) | (1 << (n - 1)))
    for pat in ev["patterns"]:
        degs = modp_degree_multiset(g, pat["p"])
        if degs != pat["degrees"] or sum(degs) != n:
            return False
        possible &= subset_sums(degs, n)
    for ex in ev.get("newton", []):
        got = newton_exclusions(g, primes=[ex["p"]])
        if not got or got[0]["l"] != ex["l"] or got[0]["k"] != ex["k"]:
            return False
        possible &= ~_exclusion_mask(n, ex["l"], ex["k"])
    return possible == 1 | (1 << n)


# ---------------------------------------------------------------- corollary

DEGREE_CAP = 300


def _certify_job(args):
    pair, coeffs, budget = args
    return pair, certify(PolynomialZ(tuple(coeffs)), budget)


def corollary_targets(result, printed_X=None) -> List[Tuple[Tuple[int, int], str]]:
    """Pairs to check, each tagged with why it is on the list.

    X is covered by the union of the computed X and the published X
    (when given), so the conclusion does not lean on either one alone.
    """
    from . import baseline

    s_max = result.config.s_max
    tags: Dict[Tuple[int, int], List[str]] = {}

    def add(pair, why):
        tags.setdefault(tuple(pair), []).append(why)

    for n, k, s in result.config.exceptional_triples:
        if s <= s_max:
            add((n, s), f"exceptional triple ({n}, {k}, {s})")
    qn, qs = baseline.COROLLARY_QUADRATIC
    if qs <= s_max:
        add((qn, qs), "n = 2 member excluded by hypothesis in the theorem")
    for pair in result.X:
        add(pair, "computed X")
    for pair in printed_X or ():
        if pair[1] <= s_max:
            add(pair, "printed X")
    ordered = sorted(tags, key=lambda t: (t[1], t[0]))
    return [(pair, "; ".join(tags[pair])) for pair in ordered]


def corollary_run(result, *, budget: int = DEFAULT_BUDGET, degree_cap: int = DEGREE_CAP,
                  printed_X=None, overrides=None, extended: bool = False, jobs: int = 1) -> dict:
    """Certify g1 at every pair the corollary needs, and state the conclusion.

    ``overrides`` maps a pair to replacement coefficients (used for negative
    tests).  Pairs above ``degree_cap`` are reported as deferred; extended
    mode is accepted but currently defers them the same way.
    """
    from concurrent.futures import ProcessPoolExecutor

    from .laguerre import g1_coefficients

    overrides = {tuple(k): v for k, v in (overrides or {}).items()}
    targets = corollary_targets(result, printed_X)
    jobs_in, entries = [], {}
    for pair, why in targets:
        n, s = pair
        if n > degree_cap:
            status = "deferred (extended mode not implemented)" if extended else "not checked at desk scale"
            entries[pair] = {"pair": list(pair), "why": why, "status": status, "certificate": None}
            continue
        coeffs = overrides.get(pair) or g1_coefficients(pair)
        jobs_in.append((pair, list(coeffs), budget))
        entries[pair] = {"pair": list(pair), "why": why, "status": "checked",
                         "tampered": pair in overrides, "certificate": None}
    if jobs > 1 and len(jobs_in) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = list(pool.map(_certify_job, jobs_in))
    else:
        done = [_certify_job(j) for j in jobs_in]
    for pair, cert in done:
        entries[pair]["certificate"] = cert.to_dict()

    checked = [e for e in entries.values() if e["status"] == "checked"]
    bad = [e["pair"] for e in checked if e["certificate"]["verdict"] != IRREDUCIBLE]
    open_pairs = [e["pair"] for e in entries.values() if e["status"] != "checked"]
    if bad:
        conclusion = None
        reason = f"withheld: not certified irreducible at {bad}"
    else:
        reason = None
        body = ", ".join(f"({n}, {s})" for n, s in open_pairs)
        conclusion = (f"g1 reducible with s <= {result.config.s_max} implies (n, s) in {{{body}}}"
                      if open_pairs else
                      f"g1 irreducible for every s <= {result.config.s_max}")
    return {
        "entries": [entries[pair] for pair, _ in targets],
        "unresolved": [e["pair"] for e in checked if e["certificate"]["verdict"] == UNRESOLVED],
        "reducible": [e["pair"] for e in checked if e["certificate"]["verdict"] == REDUCIBLE],
        "open_pairs": open_pairs,
        "conclusion": conclusion,
        "withheld_reason": reason,
    }
