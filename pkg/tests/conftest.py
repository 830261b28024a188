import networkx as nx
import pytest
from hypothesis import strategies as st

from unicyclic.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(u, v) for v in range(n) for u in range(v)]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=n))
        edges |= set(extra)
    return Graph.from_edges(n, sorted(edges))


@st.composite
def relabelings(draw, g: Graph):
    return draw(st.permutations(range(g.n)))


@pytest.fixture
def u633():
    from unicyclic.families import FamilySpec, build_U

    return build_U(FamilySpec(6, 3, 3, 1, 1))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(VERDICTS):
        terminalreporter.write_line(VERDICTS[number])
