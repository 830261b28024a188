import json

import pytest

from unicyclic import formulas
from unicyclic.enumeration import canonical_key
from unicyclic.families import FamilySpec, build_U
from unicyclic.verify import REGISTRY, VerifyError, claim_ids, format_table, verify_all, verify_claim

EXPECTED_IDS = {
    "gutman-tree", "rdd-tree", "schultz",
    "lemma1", "lemma2", "lemma3", "lemma4", "lemma5", "lemma5-delta", "lemma6",
    "thm1", "cor1", "lemma7", "lemma7-delta", "lemma7-positivity", "thm2",
    "lemma8-consistency", "lemma9-consistency",
    "lemma10", "lemma10-delta", "lemma10-positivity",
    "lemma11", "lemma11-delta", "lemma11-positivity",
    "thm3", "thm4",
    "rdd-closed-i", "rdd-closed-ii", "rdd-closed-iii", "rdd-closed-iv", "rdd-closed-v",
}


def test_every_statement_registered():
    assert EXPECTED_IDS <= set(claim_ids())


def test_thm1_example():
    report = verify_claim("thm1", 10)
    assert report.status == "pass"
    assert report.checked > 0 and report.range["n"] == [6, 10]
    assert "case_occupancy" in report.range


def test_lemma7_example():
    assert verify_claim("lemma7", 10).status == "pass"


def test_gutman_and_rdd_i():
    assert verify_claim("gutman-tree", 9).status == "pass"
    assert verify_claim("rdd-closed-i", 30).status == "pass"
    assert formulas.rdd_closed("i", 6) == 130


def test_unknown_claim():
    with pytest.raises(VerifyError, match="unknown claim"):
        verify_claim("lemma99", 8)


def test_exhaustive_beyond_ceiling():
    with pytest.raises(VerifyError, match="ceiling"):
        verify_claim("thm1", 12)
    with pytest.raises(VerifyError, match="ceiling"):
        verify_claim("thm2", 10, ceiling=9)


def test_formula_claims_ignore_ceiling():
    assert verify_claim("lemma10-positivity", 30).status == "pass"


def test_small_range():
    reports = {r.claim_id: r for r in verify_all(3, formula_n_max=12)}
    assert reports["thm1"].status == "range-too-small"
    assert reports["thm1"].skipped
    assert reports["gutman-tree"].status == "pass"
    assert reports["lemma7-positivity"].status == "pass"
    assert reports["rdd-closed-ii"].status == "pass"


def test_mutation_is_caught(monkeypatch):
    real = formulas.wiener_closed
    monkeypatch.setattr(formulas, "wiener_closed", lambda n, m, d, a, b: real(n, m, d, a, b) + 1)
    report = verify_claim("lemma8-consistency", 8)
    assert report.status == "fail"
    ce = report.counterexamples[0]
    assert set(ce["params"]) == {"n", "m", "d", "a", "b"}
    assert ce["expected"] == ce["actual"] + 1
    assert ce["graph6"]


def test_fail_embeds_replayable_witness(monkeypatch):
    import unicyclic.families as fam

    real = fam.minimizer_set

    def wrong(n, m, d):
        claim = real(n, m, d)
        if (n, m, d) == (6, 3, 3):
            claim.specs = [FamilySpec(6, 3, 3, 2, 0)]
        return claim

    monkeypatch.setattr(fam, "minimizer_set", wrong)
    report = verify_claim("thm1", 7)
    assert report.status == "fail"
    ce = report.counterexamples[0]
    assert ce["params"]["n"] == 6
    from unicyclic.graph6 import from_graph6

    keys = {canonical_key(from_graph6(s)) for s in ce["graph6"]}
    assert canonical_key(build_U(FamilySpec(6, 3, 3, 1, 1)).graph) in keys


def test_report_serializes():
    report = verify_claim("rdd-closed-iv", 12)
    data = json.loads(json.dumps(report.to_dict()))
    assert data["claim"] == "rdd-closed-iv" and data["status"] == "pass"
    assert any("parity" in note for note in data["notes"])


def test_thm4_records_exclusion():
    report = verify_claim("thm4", 9)
    assert report.status == "pass"
    assert any("U^1_{9,4,6}(2,2)" in note for note in report.notes)


def test_full_suite_n8():
    reports = verify_all(8)
    assert {r.claim_id for r in reports} == set(REGISTRY)
    assert all(r.status == "pass" for r in reports), [r.claim_id for r in reports if r.status != "pass"]
    for r in reports:
        assert r.checked > 0
    table = format_table(reports)
    assert "lemma2" in table
