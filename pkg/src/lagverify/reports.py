"""Run reports and the discrepancy ledger.

A report is plain JSON-native data (dicts, lists, str, int, bool, None), so
``RunReport.from_json(r.to_json()) == r`` holds exactly, and emission with
sorted keys makes repeated runs byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from . import baseline
from .enumeration import PipelineResult, lemma2_bound, satisfies_conditions
from .laguerre import valuation_profile
from .newton import rightmost_slope
from .quadratic import (
    MODES,
    QuadraticFamily,
    brute_force_b1,
    exceptional_b1,
    factor_pair_trace,
)

SCHEMA = "lagverify.report/1"
BRUTE_FORCE_BOUND = 10**4


@dataclass
class RunReport:
    command: str
    config: dict
    results: dict
    ledger: List[dict] = field(default_factory=list)
    timings: Optional[dict] = None
    schema: str = SCHEMA

    def to_dict(self) -> dict:
        d = {
            "schema": self.schema,
            "command": self.command,
            "config": self.config,
            "results": self.results,
            "ledger": self.ledger,
        }
        if self.timings is not None:
            d["timings"] = self.timings
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        d = json.loads(text)
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(d["command"], d["config"], d["results"], d["ledger"], d.get("timings"), d["schema"])

    @property
    def exit_code(self) -> int:
        return 3 if self.ledger else 0


def _pairs(pairs: Iterable) -> List[List[int]]:
    return [list(p) for p in sorted({tuple(p) for p in pairs}, key=lambda t: (t[1], t[0]))]


def _in_scope(pairs, s_max: int, n_cap: int):
    return {tuple(p) for p in pairs if p[1] <= s_max and p[0] <= n_cap}


def _explain(result: PipelineResult, pair) -> str:
    pair = tuple(pair)
    rec = result.records.get(pair)
    if rec is None:
        return "not in T (fails the prime-power or binomial divisibility conditions)"
    held = [o for o in rec.stage1 if o.holds]
    if held:
        p = held[0].p
        slope = rightmost_slope(valuation_profile(p, pair))
        return f"excluded at l=0: at p={p} the rightmost slope is {slope} < 1"
    if "T2" in rec.sets:
        return "in T1 with n = 2; handled by the quadratic family"
    if "T3" not in rec.sets:
        return "in T1; " + "; ".join(rec.notes)
    held2 = [o for o in rec.stage2 if o.holds]
    if held2:
        return f"in T4: l=1 lemma holds at p={held2[0].p}"
    return f"in T3; no admissible prime {[o.p for o in rec.stage2]} gives the l=1 lemma"


def theorem1_ledger(result: PipelineResult) -> List[dict]:
    cfg = result.config
    ledger = []
    seen = set()
    for pair in baseline.PRINTED_T1:
        if pair in seen and pair[1] <= cfg.s_max:
            ledger.append({"kind": "printed-duplicate", "set": "T1", "pair": list(pair),
                           "detail": "pair listed twice in the printed T1"})
        seen.add(pair)
    printed_X = _in_scope(baseline.PRINTED_X, cfg.s_max, cfg.n_cap)
    printed = {
        "T1": _in_scope(baseline.PRINTED_T1, cfg.s_max, cfg.n_cap),
        "X": printed_X,
        "T4": printed_X - {(3, 15)},
    }
    computed = {"T1": set(result.T1), "X": set(result.X), "T4": set(result.T4)}
    for name in ("T1", "T4", "X"):
        for pair in sorted(computed[name] - printed[name], key=lambda t: (t[1], t[0])):
            ledger.append({"kind": "computed-not-printed", "set": name, "pair": list(pair),
                           "detail": _explain(result, pair)})
        for pair in sorted(printed[name] - computed[name], key=lambda t: (t[1], t[0])):
            ledger.append({"kind": "printed-not-computed", "set": name, "pair": list(pair),
                           "detail": _explain(result, pair)})
    for pair in result.T2:
        if pair[1] not in baseline.LEMMA5_CLAIMS:
            ledger.append({"kind": "quadratic-not-covered", "set": "T2", "pair": list(pair),
                           "detail": "n = 2 member with s outside {3, 7, 15}; see record's quadratic findings"})
    return ledger


def theorem1_report(result: PipelineResult) -> RunReport:
    cfg = result.config
    lemma2 = [list(p) for p in result.X if p[0] > lemma2_bound(p[1])]
    recheck = [list(p) for p in result.X if not satisfies_conditions(*p)]
    survivors = sorted(set(result.T1) | set(result.deferred), key=lambda t: (t[1], t[0]))
    results = {
        "sets": {k: _pairs(v) for k, v in result.sets().items() if k != "T"},
        "T_size": len(result.T),
        "partial": result.partial,
        "lemma2_check": {"ok": not lemma2, "violations": lemma2},
        "conditions_recheck": {"ok": not recheck, "violations": recheck},
        "records": [result.records[p].to_dict() for p in survivors],
    }
    return RunReport("theorem1", cfg.to_dict(), results, theorem1_ledger(result))


def lemma5_report(modes=MODES, svals=(3, 7, 15), bound: int = BRUTE_FORCE_BOUND) -> RunReport:
    configs = []
    ledger = []
    if "printed" in modes:
        ledger.append({"kind": "normalization",
                       "detail": "constant term of g1(x, 2, s) is (2+s)(1+s); the printed family uses (2+s)(1+s)/2"})
    for s in svals:
        for mode in modes:
            for sign in (1, -1):
                fam = QuadraticFamily(s, sign, mode)
                solved = exceptional_b1(fam)
                brute = brute_force_b1(fam, bound)
                in_range = frozenset(w for w in solved if abs(w.b1) <= bound)
                agree = in_range == brute
                b_vals = sorted(w.b1 for w in solved)
                configs.append({
                    "s": s, "mode": mode, "sign": sign,
                    "linear_unit_coeff": fam.linear_unit_coeff,
                    "constant": fam.constant,
                    "witnesses": [w.to_dict() for w in sorted(solved)],
                    "trace": [t.to_dict() for t in factor_pair_trace(fam)],
                    "brute_force_bound": bound,
                    "brute_force_agrees": agree,
                })
                if not agree:
                    ledger.append({"kind": "solver-disagreement", "s": s, "mode": mode, "sign": sign,
                                   "detail": "factor-pair solver and brute force differ"})
                claimed = _claimed_b1(s, sign)
                if claimed is None:
                    continue
                extra = sorted(set(b_vals) - claimed)
                missing = sorted(claimed - set(b_vals))
                if extra or missing:
                    polys = [_render_quadratic(fam, b) for b in extra]
                    ledger.append({
                        "kind": "lemma5-claim-mismatch", "s": s, "mode": mode, "sign": sign,
                        "extra_b1": extra, "missing_b1": missing,
                        "detail": "reducible members: " + ", ".join(polys) if polys
                        else "claimed exception not reproduced",
                    })
    return RunReport("lemma5", {"modes": list(modes), "s": list(svals), "bound": bound},
                     {"families": configs}, ledger)


def _claimed_b1(s: int, sign: int):
    if s not in baseline.LEMMA5_CLAIMS:
        return None
    ns, nsign, nb = baseline.LEMMA5_NAMED_EXCEPTION
    return {nb} if (s, sign) == (ns, nsign) else set()


def _render_quadratic(fam: QuadraticFamily, b1: int) -> str:
    c0, c1, _ = fam.member(b1)
    return f"x^2 {'+' if c1 >= 0 else '-'} {abs(c1)}x {'+' if c0 >= 0 else '-'} {abs(c0)}"


def corollary_report(result: PipelineResult, run: dict, config: dict) -> RunReport:
    ledger = []
    printed_open = {tuple(p) for p in baseline.COROLLARY_OPEN if p[1] <= result.config.s_max}
    got_open = {tuple(p) for p in run["open_pairs"]}
    if run["conclusion"] is None:
        ledger.append({"kind": "conclusion-withheld", "detail": run["withheld_reason"]})
    elif got_open != printed_open:
        ledger.append({"kind": "conclusion-mismatch", "open_pairs": _pairs(got_open),
                       "printed_open_pairs": _pairs(printed_open)})
    for pair in run["unresolved"]:
        ledger.append({"kind": "unresolved", "pair": pair})
    for pair in run["reducible"]:
        ledger.append({"kind": "reducible", "pair": pair})
    only_printed = sorted(got_open - set(result.X), key=lambda t: (t[1], t[0]))
    results = dict(run)
    results["open_pairs_outside_computed_X"] = _pairs(only_printed)
    return RunReport("corollary", config, results, ledger)


def write_jsonl(records: Iterable[dict], fh) -> None:
    for rec in records:
        fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")


def render_text(report: RunReport) -> str:
    lines = [f"[{report.command}] schema {report.schema}"]
    res = report.results
    if report.command == "theorem1":
        for name, pairs in res["sets"].items():
            body = ", ".join(f"({n},{s})" for n, s in pairs)
            lines.append(f"{name:>9}: {{{body}}}")
        lines.append(f"lemma2 bound check: {'ok' if res['lemma2_check']['ok'] else 'FAILED'}")
        lines.append(f"partial result: {res['partial']}")
    elif report.command == "lemma5":
        for fam in res["families"]:
            bs = [w["b1"] for w in fam["witnesses"]]
            sums = [t["combined"] for t in fam["trace"]]
            lines.append(f"s={fam['s']:>2} {fam['mode']:<7} const {fam['constant']:>5}: "
                         f"b1 in {bs}  trace {sums}  brute-force agrees: {fam['brute_force_agrees']}")
    elif report.command == "corollary":
        for e in res["entries"]:
            cert = e["certificate"]
            verdict = cert["verdict"] if cert else e["status"]
            lines.append(f"({e['pair'][0]}, {e['pair'][1]}): {verdict}   [{e['why']}]")
        lines.append("conclusion: " + (res["conclusion"] or res["withheld_reason"]))
    else:
        lines.append(json.dumps(res, sort_keys=True, indent=2))
    if report.ledger:
        lines.append(f"discrepancy ledger ({len(report.ledger)} entries):")
        for entry in report.ledger:
            fields = {k: v for k, v in entry.items() if k != "kind"}
            lines.append(f"  - {entry['kind']}: {json.dumps(fields, sort_keys=True)}")
    if report.timings:
        lines.append("timings: " + ", ".join(f"{k}={v:.2f}s" for k, v in report.timings.items()))
    return "\n".join(lines) + "\n"
