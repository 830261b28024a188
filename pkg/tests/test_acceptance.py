"""Acceptance criteria 1-8, each at its stated tolerance and time budget.

Every test records a one-line PASS/FAIL verdict; ``conftest.py`` prints
them in the terminal summary.
"""

import time

import pytest

from unicyclic import formulas as fm
from unicyclic.enumeration import canonical_key, unicyclic_catalog
from unicyclic.families import U, build_U, maximizer_set_maxdeg, maximizer_set_pendants
from unicyclic.graph import reverse_degree_distance
from unicyclic.verify import verify_claim

VERDICTS: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    number = request.param
    start = time.perf_counter()
    state = {"ok": False, "detail": ""}
    yield state
    elapsed = time.perf_counter() - start
    verdict = "PASS" if state["ok"] else "FAIL"
    VERDICTS[number] = f"criterion {number}: {verdict} ({elapsed:.2f}s) {state['detail']}".rstrip()
    print(VERDICTS[number])


def _run_claims(ids, n_max, **kw):
    reports = [verify_claim(i, n_max, **kw) for i in ids]
    bad = [(r.claim_id, r.counterexamples[:1]) for r in reports if r.status != "pass"]
    return reports, bad


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


@pytest.mark.parametrize("criterion", [1], indirect=True)
def test_1_tree_identities(criterion):
    (reports, bad), secs = _timed(lambda: _run_claims(["gutman-tree", "rdd-tree"], 9))
    assert not bad, bad
    assert secs < 10
    criterion.update(ok=True, detail=f"{reports[0].checked} trees, both identities")


@pytest.mark.parametrize("criterion", [2], indirect=True)
def test_2_closed_forms_to_14(criterion):
    (reports, bad), secs = _timed(lambda: _run_claims(["lemma8-consistency", "lemma9-consistency"], 14))
    assert not bad, bad
    assert secs < 30
    assert reports[1].range["roles"] == list(fm.TRANSMISSION_ROLES)
    criterion.update(ok=True, detail=f"{reports[0].checked} Wiener and {reports[1].checked} transmission points")


@pytest.mark.parametrize("criterion", [3], indirect=True)
def test_3_delta_formulas_to_12(criterion):
    reports, bad = _run_claims(["lemma3", "lemma4", "lemma5-delta", "lemma7-delta"], 12)
    assert not bad, bad
    hi, lo, gamma = fm.lemma7_pair(6, 3, 3)
    assert (gamma, reverse_degree_distance(hi), reverse_degree_distance(lo)) == (1, 134, 88)
    assert reverse_degree_distance(hi) - reverse_degree_distance(lo) == 46 == fm.delta_lemma7(1, 6)
    criterion.update(ok=True, detail=f"{sum(r.checked for r in reports)} realized pairs")


@pytest.mark.parametrize("criterion", [4], indirect=True)
def test_4_minimizers_to_10(criterion):
    unicyclic_catalog.cache_clear()
    (reports, bad), secs = _timed(lambda: _run_claims(["thm1", "cor1"], 10, ceiling=10))
    assert not bad, bad
    assert secs < 60
    occupancy = reports[0].range["case_occupancy"]
    criterion.update(ok=True, detail=f"{reports[0].checked} (n,m,d) classes, cases {occupancy}")


@pytest.mark.parametrize("criterion", [5], indirect=True)
def test_5_maximizers_to_10(criterion):
    reports, bad = _run_claims(["thm2", "thm3", "thm4"], 10, ceiling=10)
    assert not bad, bad
    u734 = canonical_key(build_U(U(7, 3, 4)).graph)
    assert set(maximizer_set_pendants(7, 3).canonical_set()) == {u734}
    assert set(maximizer_set_maxdeg(7, 4).canonical_set()) == {u734}
    criterion.update(ok=True, detail=f"{sum(r.checked for r in reports)} classes")


@pytest.mark.parametrize("criterion", [6], indirect=True)
def test_6_final_values_to_30(criterion):
    ids = [f"rdd-closed-{c}" for c in fm.RDD_CASES]
    (reports, bad), secs = _timed(lambda: _run_claims(ids, 30))
    assert not bad, bad
    assert secs < 5
    assert fm.rdd_closed("i", 6) == 130 == reverse_degree_distance(build_U(fm.rdd_family("i", 6)).graph)
    criterion.update(ok=True, detail=f"{sum(r.checked for r in reports)} evaluations")


@pytest.mark.parametrize("criterion", [7], indirect=True)
def test_7_enumeration_completeness(criterion):
    counts = [len(unicyclic_catalog(n)) for n in range(3, 11)]
    assert counts == [1, 2, 5, 13, 33, 89, 240, 657]
    for n in range(3, 10):
        assert [e.key for e in unicyclic_catalog(n, "forest")] == [e.key for e in unicyclic_catalog(n, "tree-edge")]
    criterion.update(ok=True, detail=f"counts {counts}")


@pytest.mark.parametrize("criterion", [8], indirect=True)
def test_8_positivity_to_30(criterion):
    reports, bad = _run_claims(["lemma7-positivity", "lemma10-positivity", "lemma11-positivity"], 30)
    assert not bad, bad
    criterion.update(ok=True, detail=f"{sum(r.checked for r in reports)} grid points")
