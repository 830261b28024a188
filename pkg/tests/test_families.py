import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unicyclic.enumeration import canonical_key
from unicyclic.families import (
    FamilyParameterError,
    FamilySpec,
    U,
    alpha,
    build_U,
    family_grid,
    gamma_theta,
    legal_ab,
    maximizer_set_girth,
    maximizer_set_maxdeg,
    maximizer_set_pendants,
    minimizer_case,
    minimizer_set,
)
from unicyclic.graph import degree_distance, reverse_degree_distance, structural_profile, wiener


def _labels(claim):
    return sorted(s.label() for s in claim.specs)


def test_build_examples():
    assert degree_distance(build_U(FamilySpec(6, 3, 3, 1, 1)).graph) == 92
    g = build_U(FamilySpec(6, 4, 4, 2, 0)).graph
    assert degree_distance(g) == 110
    assert reverse_degree_distance(g) == 130
    assert wiener(build_U(FamilySpec(5, 3, 3, 1, 1)).graph) == 16


def test_landmarks():
    real = build_U(FamilySpec(8, 4, 5, 2, 1))
    g = real.graph
    assert g.degree(real["u0"]) == 1 and g.degree(real["u1"]) == 1
    assert real["w"] in g.adj[real["u0"]]
    no_b = build_U(FamilySpec(6, 4, 4, 2, 0))
    assert no_b["u1"] == no_b["v2"]


@pytest.mark.parametrize(
    "args, fragment",
    [
        ((6, 2, 3, 2, 0), "m >= 3"),
        ((6, 3, 3, 0, 2), "a >= 1"),
        ((6, 3, 3, 1, 2), "a >= b"),
        ((6, 3, 4, 1, 1), "a+b"),
        ((6, 3, 9, 8, 0), "d <="),
        ((8, 4, 4, 1, 1, 2), "k="),
    ],
)
def test_parameter_errors_name_the_constraint(args, fragment):
    with pytest.raises(FamilyParameterError, match=fragment.replace("+", r"\+")):
        build_U(FamilySpec(*args))


def test_json_roundtrip():
    spec = FamilySpec(9, 4, 6, 2, 2, 1)
    text = spec.to_json()
    assert " " not in text
    assert FamilySpec.from_dict(json.loads(text)) == spec
    assert spec.label() == "U^1_{9,4,6}(2,2)"


def test_alpha_examples():
    assert alpha(6, 3, 3) == Fraction(2, 5)
    assert alpha(10, 4, 5) == Fraction(4, 3)
    assert alpha(8, 4, 6) == 0  # h = 0


def test_gamma_theta_examples():
    assert gamma_theta(6, 3, 3) == (1, 1)
    assert gamma_theta(10, 4, 5) == (2, 1)
    assert gamma_theta(9, 4, 7) == (3, 2)  # h = 0, odd sum


def test_alpha_range_errors():
    with pytest.raises(FamilyParameterError):
        alpha(5, 3, 3)
    with pytest.raises(FamilyParameterError):
        alpha(8, 7, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(6, 40), st.data())
def test_gamma_theta_rule(n, data):
    m = data.draw(st.integers(3, n - 2))
    d = data.draw(st.integers(m // 2 + 1, n - (m + 1) // 2).filter(lambda x: x >= 3))
    g, t = gamma_theta(n, m, d)
    s = d - m // 2
    assert g + t == s and g >= t >= 0
    assert g - t <= min(alpha(n, m, d) + 1, s)
    assert g - t + 2 > min(alpha(n, m, d) + 1, s)


def test_minimizer_examples():
    claim = minimizer_set(6, 3, 3)
    assert claim.case == "i"
    assert _labels(claim) == ["U_{6,3,3}(1,1)"]
    claim = minimizer_set(10, 4, 5)
    assert claim.case == "iv"
    assert _labels(claim) == ["U_{10,4,5}(2,1)"]
    assert minimizer_set(9, 4, 7).case == "iv"  # h = 0


def test_minimizer_empty_class():
    # d < floor(m/2) + 1 admits no unicyclic graph
    assert minimizer_case(10, 8, 3) == "empty"
    assert minimizer_set(10, 8, 3).specs == []


def test_minimizer_case_iii_tie_and_cap():
    assert minimizer_set(14, 6, 6).case == "iii"
    assert _labels(minimizer_set(14, 6, 6)) == ["U_{14,6,6}(2,1)", "U_{14,6,6}(3,0)"]
    # alpha = 2 here but d - floor(m/2) = 1 caps gamma - theta, so no tied split exists
    capped = minimizer_set(12, 6, 4)
    assert capped.case == "iii"
    assert _labels(capped) == ["U_{12,6,4}(1,0)"]


def test_minimizer_case_ii_never_occurs():
    # alpha has even numerator over odd denominator, so alpha == 1 is impossible
    for n in range(6, 41):
        for m in range(3, n - 1):
            for d in range(3, n - (m + 1) // 2 + 1):
                assert alpha(n, m, d) != 1


def test_balanced_k_variants_have_equal_degree_distance():
    for spec in family_grid(12):
        if spec.a == spec.b:
            values = {degree_distance(build_U(FamilySpec(spec.n, spec.m, spec.d, spec.a, spec.b, k)).graph) for k in range(spec.m // 4 + 1)}
            assert len(values) == 1


def test_gamma_theta_minimizes_over_splits():
    for n in range(6, 12):
        for m in range(3, n - 1):
            for d in range(m // 2 + 1, n - (m + 1) // 2 + 1):
                if d < 3:
                    continue
                best = degree_distance(build_U(U(n, m, d)).graph)
                for a, b in legal_ab(n, m, d):
                    assert best <= degree_distance(build_U(FamilySpec(n, m, d, a, b)).graph)


def test_girth_examples():
    assert _labels(maximizer_set_girth(6, 3)) == ["U_{6,3,4}(2,1)"]
    assert _labels(maximizer_set_girth(6, 4)) == ["U_{6,4,4}(1,1)"]
    assert maximizer_set_girth(10, 5).specs[0].d == 7


def test_pendant_examples():
    assert _labels(maximizer_set_pendants(7, 3)) == ["U_{7,3,4}(2,1)"]
    assert [s.d for s in maximizer_set_pendants(10, 3).specs] == [7]
    assert [s.m for s in maximizer_set_pendants(10, 3).specs] == [4]
    assert _labels(maximizer_set_pendants(6, 2)) == [U(6, 4, 4).label()]
    assert _labels(maximizer_set_pendants(8, 1)) == ["U_{8,4,6}(4,0)"]


def test_maxdeg_examples():
    assert _labels(maximizer_set_maxdeg(9, 3)) == [U(9, 4, 7).label()]
    assert _labels(maximizer_set_maxdeg(7, 4)) == ["U_{7,3,4}(2,1)"]
    cyc = maximizer_set_maxdeg(8, 2)
    assert cyc.specs == [] and [label for label, _ in cyc.special] == ["C_8"]


def test_maxdeg_odd_n_listed_and_kept():
    claim = maximizer_set_maxdeg(9, 4)
    # both k = 0, 1 are listed; only k = 0 has maximum degree 4
    assert sorted(s.label() for s in claim.listed) == ["U^1_{9,4,6}(2,2)", "U_{9,4,6}(2,2)"]
    assert _labels(claim) == ["U_{9,4,6}(2,2)"]
    assert claim.excluded and "max degree is 3" in claim.excluded[0][1]
    g0, g1 = (build_U(s).graph for s in claim.listed)
    assert canonical_key(g0) != canonical_key(g1)


def test_registry_graphs_lie_in_their_class():
    for n in range(6, 16):
        for m in range(3, n - 1):
            for label, g in maximizer_set_girth(n, m).graphs():
                assert structural_profile(g).girth == m
        for p in range(1, n - 2):
            for label, g in maximizer_set_pendants(n, p).graphs():
                assert structural_profile(g).pendant_count == p, label
        for delta in range(2, n):
            for label, g in maximizer_set_maxdeg(n, delta).graphs():
                assert structural_profile(g).max_degree == delta, label


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(list(family_grid(16))), st.data())
def test_build_matches_spec(spec, data):
    k = data.draw(st.integers(0, spec.m // 4))
    spec = FamilySpec(spec.n, spec.m, spec.d, spec.a, spec.b, k)
    r = structural_profile(build_U(spec).graph)
    assert (r.n, r.edge_count, r.girth, r.diameter) == (spec.n, spec.n, spec.m, spec.d)
    path_ends = (spec.a >= 1) + (spec.b >= 1)
    assert r.pendant_count == spec.h + path_ends
