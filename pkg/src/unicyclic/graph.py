"""Simple undirected graphs and their distance/degree invariants.

Everything here is exact integer arithmetic. Vertices are dense 0-based
labels; the adjacency of vertex ``v`` is the sorted tuple ``g.adj[v]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or invariant queries on disconnected graphs."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbors of {v} must be sorted and distinct")
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise GraphError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise GraphError(f"loop at vertex {v}")
                if v not in self.adj[w]:
                    raise GraphError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if v in nbrs[u]:
                raise GraphError(f"parallel edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def add_pendants(self, v: int, count: int) -> Graph:
        """Attach ``count`` new degree-one vertices to ``v``."""
        new = [(v, self.n + i) for i in range(count)]
        return Graph.from_edges(self.n + count, self.edges + new)

    @cached_property
    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return all(x >= 0 for x in _bfs(self.adj, 0))

    @cached_property
    def distance_matrix(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_connected:
            raise GraphError("not connected")
        return tuple(tuple(_bfs(self.adj, u)) for u in range(self.n))


def _bfs(adj: Sequence[Sequence[int]], source: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def _check_vertex(g: Graph, u: int) -> None:
    if not isinstance(u, int) or not 0 <= u < g.n:
        raise GraphError(f"invalid vertex label {u!r} for n={g.n}")


def distances(g: Graph, u: int) -> list[int]:
    """Breadth-first distances from ``u`` to every vertex."""
    _check_vertex(g, u)
    return list(g.distance_matrix[u])


def transmission(g: Graph, u: int) -> int:
    """Sum of distances from ``u`` to all vertices."""
    _check_vertex(g, u)
    return sum(g.distance_matrix[u])


def transmissions(g: Graph) -> list[int]:
    return [sum(row) for row in g.distance_matrix]


def wiener(g: Graph) -> int:
    total = sum(transmissions(g))
    assert total % 2 == 0
    return total // 2


def degree_distance(g: Graph) -> int:
    """Sum over vertices of degree times transmission."""
    return sum(d * t for d, t in zip(g.degrees, transmissions(g)))


def diameter(g: Graph) -> int:
    return max(max(row) for row in g.distance_matrix)


def reverse_degree_distance(g: Graph) -> int:
    """``2(n-1) * edges * diameter - D'``; note the edge count, not the girth."""
    return 2 * (g.n - 1) * g.edge_count * diameter(g) - degree_distance(g)


def first_zagreb(g: Graph) -> int:
    return sum(d * d for d in g.degrees)


def schultz(g: Graph) -> int:
    """Molecular topological index, summed pairwise as sum_{u,v} (d_u + d_v) d(u,v) / 2 + Zagreb."""
    dm = g.distance_matrix
    deg = g.degrees
    pair_sum = sum((deg[u] + deg[v]) * dm[u][v] for u in range(g.n) for v in range(u + 1, g.n))
    return pair_sum + first_zagreb(g)


def pendant_count(g: Graph) -> int:
    return sum(1 for d in g.degrees if d == 1)


def max_degree(g: Graph) -> int:
    return max(g.degrees) if g.n else 0


def cycle_vertices(g: Graph) -> list[int]:
    """Vertices left after repeatedly stripping degree-one vertices.

    For a unicyclic graph this is exactly the vertex set of its cycle; for a
    tree it is empty.
    """
    deg = g.degrees
    removed = [False] * g.n
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if removed[v]:
            continue
        removed[v] = True
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    return [v for v in range(g.n) if not removed[v]]


def girth_unicyclic(g: Graph) -> Optional[int]:
    """Length of the unique cycle, or ``None`` for a tree."""
    if not g.is_connected:
        raise GraphError("not connected")
    if g.edge_count == g.n - 1:
        return None
    if g.edge_count != g.n:
        raise GraphError("girth is only computed for trees and unicyclic graphs")
    return len(cycle_vertices(g))


def cycle_order(g: Graph) -> list[int]:
    """The cycle of a unicyclic graph as a vertex sequence, starting at its smallest label."""
    core = set(cycle_vertices(g))
    if not core:
        raise GraphError("graph has no cycle")
    start = min(core)
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = min(w for w in g.adj[cur] if w in core and w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


@dataclass(frozen=True)
class InvariantReport:
    n: int
    edge_count: int
    girth: Optional[int]
    diameter: int
    pendant_count: int
    max_degree: int
    wiener: int
    degree_distance: int
    reverse_degree_distance: int
    first_zagreb: int
    schultz: int

    def to_dict(self) -> dict:
        return asdict(self)


def structural_profile(g: Graph) -> InvariantReport:
    if not g.is_connected:
        raise GraphError("not connected")
    girth = None
    if g.edge_count == g.n:
        girth = len(cycle_vertices(g))
    return InvariantReport(
        n=g.n,
        edge_count=g.edge_count,
        girth=girth,
        diameter=diameter(g),
        pendant_count=pendant_count(g),
        max_degree=max_degree(g),
        wiener=wiener(g),
        degree_distance=degree_distance(g),
        reverse_degree_distance=reverse_degree_distance(g),
        first_zagreb=first_zagreb(g),
        schultz=schultz(g),
    )


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
