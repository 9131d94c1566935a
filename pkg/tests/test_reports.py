import io
import json

import pytest

from lagverify import baseline
from lagverify.enumeration import PipelineConfig, run_pipeline
from lagverify.irreducibility import corollary_run
from lagverify.reports import (
    SCHEMA,
    RunReport,
    corollary_report,
    lemma5_report,
    render_text,
    theorem1_ledger,
    theorem1_report,
    write_jsonl,
)


def kinds(ledger):
    return [(e["kind"], e.get("set"), tuple(e["pair"]) if "pair" in e else None) for e in ledger]


def test_baseline_is_verbatim():
    assert len(baseline.PRINTED_T1) == 27
    assert baseline.PRINTED_T1.count((16, 19)) == 2
    assert len(baseline.PRINTED_X) == 15
    assert len(baseline.LEMMA3_TRIPLES) == 10


def test_theorem1_ledger(full_run):
    got = kinds(theorem1_ledger(full_run))
    assert ("printed-duplicate", "T1", (16, 19)) in got
    assert ("computed-not-printed", "T1", (16, 29)) in got
    for pair in [(786600, 25), (786600, 26)]:
        for name in ("T1", "T4", "X"):
            assert ("printed-not-computed", name, pair) in got
    assert ("computed-not-printed", "X", (3, 26)) in got
    assert ("quadratic-not-covered", "T2", (2, 26)) in got


def test_ledger_explains_786600(full_run):
    entry = next(e for e in theorem1_ledger(full_run) if e.get("pair") == [786600, 25])
    assert entry["detail"] == "excluded at l=0: at p=3 the rightmost slope is 5/9 < 1"


def test_theorem1_report(full_run):
    rep = theorem1_report(full_run)
    assert rep.exit_code == 3
    res = rep.results
    assert res["lemma2_check"]["ok"] and res["conditions_recheck"]["ok"]
    assert res["sets"]["T2"] == [[2, 3], [2, 7], [2, 15], [2, 26]]
    assert "T" not in res["sets"]
    assert res["T_size"] == len(full_run.T)


def test_clean_scope_has_empty_ledger():
    rep = theorem1_report(run_pipeline(PipelineConfig(s_max=17, n_cap=10**6)))
    assert rep.ledger == [] and rep.exit_code == 0


def test_json_round_trip(full_run):
    rep = theorem1_report(full_run)
    again = RunReport.from_json(rep.to_json())
    assert again == rep
    assert again.to_json() == rep.to_json()
    rep.timings = {"pipeline": 0.5}
    assert RunReport.from_json(rep.to_json()) == rep


def test_schema_guard():
    with pytest.raises(ValueError):
        RunReport.from_json(json.dumps({"schema": "other"}))
    assert json.loads(RunReport("x", {}, {}).to_json())["schema"] == SCHEMA


@pytest.fixture(scope="module")
def lemma5():
    return lemma5_report(bound=2000)


def test_lemma5_report(lemma5):
    fams = lemma5.results["families"]
    assert len(fams) == 12
    assert all(f["brute_force_agrees"] for f in fams)
    s3 = next(f for f in fams if (f["s"], f["mode"], f["sign"]) == (3, "printed", 1))
    assert [t["pair"] for t in s3["trace"]] == [list(p) for p in baseline.LEMMA5_S3_PAIRS]
    assert [t["combined"] for t in s3["trace"]] == list(baseline.LEMMA5_S3_SUMS)
    s7 = next(f for f in fams if (f["s"], f["mode"], f["sign"]) == (7, "printed", -1))
    assert {"b1": 0, "m": 12, "roots": [6, -6]} in s7["witnesses"]


def test_lemma5_ledger(lemma5):
    entries = [e for e in lemma5.ledger if e["kind"] == "lemma5-claim-mismatch"]
    keyed = {(e["s"], e["mode"], e["sign"]): e for e in entries}
    assert keyed[(7, "printed", -1)]["extra_b1"] == [-1, 1]
    assert keyed[(7, "derived", -1)]["missing_b1"] == [0]
    assert keyed[(3, "derived", -1)]["extra_b1"] == [-1, 1]
    assert keyed[(15, "derived", -1)]["extra_b1"] == [-2, 2]
    assert len(entries) == 4
    assert lemma5.ledger[0]["kind"] == "normalization"


def test_corollary_report(full_run):
    run = corollary_run(full_run, printed_X=baseline.PRINTED_X, degree_cap=20)
    rep = corollary_report(full_run, run, {})
    # degree cap 20 leaves (72, 11) and (272, 17) open too
    assert any(e["kind"] == "conclusion-mismatch" for e in rep.ledger)
    assert [72, 11] in rep.results["open_pairs"]


def test_write_jsonl():
    buf = io.StringIO()
    write_jsonl([{"b": 1, "a": [1, 2]}, {"c": None}], buf)
    assert buf.getvalue() == '{"a":[1,2],"b":1}\n{"c":null}\n'


def test_render_text(full_run, lemma5):
    text = render_text(theorem1_report(full_run))
    assert "X: {(6,3), (4,5)" in text
    assert "discrepancy ledger" in text
    assert "trace [41, 22, 14, 13]" in render_text(lemma5)
