import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_graphs, to_nx
from unicyclic.graph import (
    Graph,
    GraphError,
    cycle_graph,
    cycle_order,
    degree_distance,
    diameter,
    distances,
    first_zagreb,
    girth_unicyclic,
    path_graph,
    reverse_degree_distance,
    schultz,
    star_graph,
    structural_profile,
    transmission,
    transmissions,
    wiener,
)


def test_distances_small():
    assert distances(cycle_graph(4), 0) == [0, 1, 2, 1]
    assert distances(path_graph(3), 0) == [0, 1, 2]


def test_transmission_examples(u633):
    assert transmission(cycle_graph(3), 1) == 2
    assert all(transmission(cycle_graph(5), v) == 6 for v in range(5))
    star = star_graph(3)
    assert transmission(star, 0) == 3
    assert transmission(star, 1) == 5
    assert transmission(u633.graph, u633["v2"]) == 8


def test_wiener_examples():
    assert wiener(cycle_graph(4)) == 8
    assert wiener(star_graph(3)) == 9


def test_degree_distance_examples():
    assert degree_distance(cycle_graph(3)) == 12
    assert degree_distance(path_graph(3)) == 10 == 4 * wiener(path_graph(3)) - 6


def test_reverse_degree_distance_examples():
    assert reverse_degree_distance(cycle_graph(3)) == 0
    assert reverse_degree_distance(cycle_graph(4)) == 16


def test_profile_cycle():
    r = structural_profile(cycle_graph(5))
    assert (r.girth, r.diameter, r.pendant_count, r.max_degree) == (5, 2, 0, 2)
    assert (r.wiener, r.degree_distance, r.reverse_degree_distance) == (15, 60, 20)


def test_profile_u633(u633):
    r = structural_profile(u633.graph)
    assert (r.girth, r.diameter, r.pendant_count, r.max_degree) == (3, 3, 3, 4)
    assert (r.wiener, r.degree_distance, r.reverse_degree_distance) == (26, 92, 88)


def test_tree_restatement_on_path():
    p4 = path_graph(4)
    n, d = 4, diameter(p4)
    assert reverse_degree_distance(p4) * 2 == 4 * ((n - 1) ** 2 * d - 2 * wiener(p4)) + 2 * n * (n - 1)


def test_invalid_graphs_rejected():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, ((1,), ()))
    with pytest.raises(GraphError):
        transmission(path_graph(3), 5)


def test_disconnected_invariants_raise():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not g.is_connected
    with pytest.raises(GraphError, match="not connected"):
        wiener(g)


def test_cycle_order():
    g = cycle_graph(5).add_pendants(2, 2)
    assert girth_unicyclic(g) == 5
    assert sorted(cycle_order(g)) == [0, 1, 2, 3, 4]
    assert girth_unicyclic(path_graph(4)) is None


@settings(max_examples=80, deadline=None)
@given(connected_graphs(min_n=2))
def test_invariants_match_networkx(g):
    h = to_nx(g)
    assert wiener(g) == nx.wiener_index(h)
    assert diameter(g) == nx.diameter(h)
    lengths = dict(nx.all_pairs_shortest_path_length(h))
    assert [distances(g, 0)[v] for v in range(g.n)] == [lengths[0][v] for v in range(g.n)]


@settings(max_examples=80, deadline=None)
@given(connected_graphs())
def test_sum_identities(g):
    assert sum(transmissions(g)) == 2 * wiener(g)
    assert schultz(g) == degree_distance(g) + first_zagreb(g)
    assert reverse_degree_distance(g) == 2 * (g.n - 1) * g.edge_count * diameter(g) - degree_distance(g)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_relabel_invariance(data):
    g = data.draw(connected_graphs())
    perm = data.draw(st.permutations(range(g.n)))
    h = g.relabel(perm)
    assert structural_profile(h) == structural_profile(g)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=3), st.data())
def test_distance_metric(g, data):
    u, v, w = (data.draw(st.integers(0, g.n - 1)) for _ in range(3))
    du, dv = distances(g, u), distances(g, v)
    assert du[v] == dv[u]
    assert du[w] <= du[v] + dv[w]
