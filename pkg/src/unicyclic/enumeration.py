"""Exhaustive generation of small graphs up to isomorphism.

Canonical keys are exact: the key of a graph is the lexicographically least
upper-triangle adjacency bitstring over all labelings reachable by
individualization/refinement starting from the (degree, transmission)
partition. Refinement only prunes the labelings that are explored; it never
decides isomorphism on its own.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .graph import Graph, GraphError, InvariantReport, structural_profile, transmissions
from .graph6 import to_graph6

DEFAULT_CEILING = 11
KNOWN_MAX = 11


class EnumerationError(ValueError):
    pass


# canonical form


def _refine(adj: Sequence[Sequence[int]], cells: list[list[int]]) -> list[list[int]]:
    n = len(adj)
    while True:
        cell_of = [0] * n
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                sig = tuple(sorted(cell_of[w] for w in adj[v]))
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[sig] for sig in sorted(groups))
            else:
                out.append(c)
        cells = out
        if not changed:
            return cells


def _certificate(adj: Sequence[Sequence[int]], order: Sequence[int]) -> bytes:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    bits = 0
    for j in range(n):
        row = 0
        for w in adj[order[j]]:
            i = pos[w]
            if i < j:
                row |= 1 << (j - 1 - i)
        bits = (bits << j) | row
    nbits = n * (n - 1) // 2
    return n.to_bytes(2, "big") + bits.to_bytes((nbits + 7) // 8, "big")


def _twins(adj: Sequence[Sequence[int]], v: int, w: int) -> bool:
    nv = set(adj[v]) - {w}
    nw = set(adj[w]) - {v}
    return nv == nw


def canonical_key(g: Graph, fixed: Sequence[int] = ()) -> bytes:
    """Relabeling-invariant key; equal keys iff the graphs are isomorphic.

    The key is the least certificate over labelings that respect the
    refined (degree, transmission) partition, so its bytes can differ from
    ``canonical_key_bruteforce`` while inducing the same classes.

    Vertices in ``fixed`` are individualized first, in order, so the key
    identifies the graph together with that vertex tuple (used to pick one
    representative per orbit of rooted graphs).
    """
    adj = g.adj
    if g.n == 0:
        return b"\x00\x00"
    try:
        trans = transmissions(g)
    except GraphError:
        trans = [0] * g.n
    inv: dict[tuple[int, int], list[int]] = {}
    for v in range(g.n):
        if v not in fixed:
            inv.setdefault((len(adj[v]), trans[v]), []).append(v)
    start = [[v] for v in fixed] + [inv[key] for key in sorted(inv)]

    best: list[Optional[bytes]] = [None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cert = _certificate(adj, [c[0] for c in cells])
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # swapping twins is an automorphism fixing the current partition
            if any(_twins(adj, v, u) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    search(start)
    assert best[0] is not None
    return best[0]


def canonical_key_bruteforce(g: Graph) -> bytes:
    """Least certificate over every one of the ``n!`` labelings (small ``n`` only)."""
    return min(_certificate(g.adj, order) for order in permutations(range(g.n)))


def graph_from_key(key: bytes) -> Graph:
    n = int.from_bytes(key[:2], "big")
    nbits = n * (n - 1) // 2
    bits = int.from_bytes(key[2:], "big")
    edges = []
    # rows were packed most-significant first; row j holds bit (j-1-i) for position i
    pos = nbits
    for j in range(1, n):
        pos -= j
        row = (bits >> pos) & ((1 << j) - 1)
        for i in range(j):
            if row >> (j - 1 - i) & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


# trees


RootedTree = tuple  # canonical nested tuple of child subtrees, sorted


def tree_size(t: RootedTree) -> int:
    return 1 + sum(tree_size(c) for c in t)


@lru_cache(maxsize=None)
def rooted_trees(size: int) -> tuple[RootedTree, ...]:
    """All unlabeled rooted trees on ``size`` vertices as canonical nested tuples."""
    if size < 1:
        return ()
    if size == 1:
        return ((),)
    items = [(s, i) for s in range(1, size) for i in range(len(rooted_trees(s)))]
    out = []

    def rec(remaining: int, start: int, chosen: list[tuple[int, int]]) -> None:
        if remaining == 0:
            out.append(tuple(sorted(rooted_trees(s)[i] for s, i in chosen)))
            return
        for idx in range(start, len(items)):
            s, _ = items[idx]
            if s > remaining:
                break
            chosen.append(items[idx])
            rec(remaining - s, idx, chosen)
            chosen.pop()

    rec(size - 1, 0, [])
    return tuple(sorted(set(out)))


def _attach_tree(edges: list[tuple[int, int]], root: int, tree: RootedTree, next_label: int) -> int:
    for child in tree:
        v = next_label
        edges.append((root, v))
        next_label = _attach_tree(edges, v, child, next_label + 1)
    return next_label


def rooted_tree_graph(tree: RootedTree) -> Graph:
    edges: list[tuple[int, int]] = []
    n = _attach_tree(edges, 0, tree, 1)
    return Graph.from_edges(n, edges)


def _dedup_sorted(graphs) -> list[Graph]:
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        seen.setdefault(canonical_key(g), g)
    return [seen[k] for k in sorted(seen)]


@lru_cache(maxsize=None)
def _trees_forest(n: int) -> tuple[Graph, ...]:
    return tuple(_dedup_sorted(rooted_tree_graph(t) for t in rooted_trees(n)))


@lru_cache(maxsize=None)
def _trees_leaf(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ((),)),)
    return tuple(_dedup_sorted(t.add_pendants(v, 1) for t in _trees_leaf(n - 1) for v in range(t.n)))


def enumerate_trees(n: int, strategy: str = "forest") -> list[Graph]:
    """Free trees on ``n`` vertices, one per isomorphism class, sorted by key.

    ``forest`` unroots the rooted-tree generator; ``leaf`` grows trees one
    leaf at a time. They are independent and serve as cross-checks.
    """
    if n < 1:
        return []
    if strategy == "forest":
        return list(_trees_forest(n))
    if strategy == "leaf":
        return list(_trees_leaf(n))
    raise EnumerationError(f"unknown tree strategy {strategy!r}")


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on ``n`` vertices (by adding a vertex to smaller ones)."""
    if n == 1:
        return (Graph(1, ((),)),)
    out = []
    for g in connected_graphs(n - 1):
        for mask in range(1, 1 << (n - 1)):
            new = [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            out.append(Graph.from_edges(n, g.edges + new))
    return tuple(_dedup_sorted(out))


# unicyclic graphs


def _dihedral_min(seq: tuple[int, ...]) -> bool:
    m = len(seq)
    rev = seq[::-1]
    for r in range(m):
        if seq[r:] + seq[:r] < seq or rev[r:] + rev[:r] < seq:
            return False
    return True


def _unicyclic_forest(n: int) -> list[Graph]:
    # ids order rooted trees by (size, index); a cyclic sequence of ids up to
    # rotation/reflection is one isomorphism class
    ids: list[tuple[int, RootedTree]] = []
    for s in range(1, n - 1):
        for t in rooted_trees(s):
            ids.append((s, t))
    out = []
    for m in range(3, n + 1):

        def rec(pos: int, remaining: int, seq: list[int]) -> None:
            if pos == m:
                if remaining == 0 and _dihedral_min(tuple(seq)):
                    out.append(_cycle_with_trees([ids[i][1] for i in seq]))
                return
            slots_left = m - pos - 1
            for i, (s, _) in enumerate(ids):
                if s > remaining - slots_left:
                    break
                seq.append(i)
                rec(pos + 1, remaining - s, seq)
                seq.pop()

        rec(0, n, [])
    return out


def _cycle_with_trees(trees: list[RootedTree]) -> Graph:
    m = len(trees)
    edges = [(i, (i + 1) % m) for i in range(m)]
    nxt = m
    for i, t in enumerate(trees):
        nxt = _attach_tree(edges, i, t, nxt)
    return Graph.from_edges(nxt, edges)


def _unicyclic_tree_edge(n: int) -> list[Graph]:
    out = []
    for t in enumerate_trees(n, "leaf"):
        for u in range(n):
            for v in range(u + 1, n):
                if v not in t.adj[u]:
                    out.append(Graph.from_edges(n, t.edges + [(u, v)]))
    return out


@dataclass(frozen=True)
class CatalogEntry:
    key: bytes
    graph: Graph
    profile: InvariantReport


@lru_cache(maxsize=None)
def unicyclic_catalog(n: int, strategy: str = "forest") -> tuple[CatalogEntry, ...]:
    """All unicyclic graphs on ``n`` vertices with precomputed invariants, sorted by key."""
    if strategy == "forest":
        raw = _unicyclic_forest(n)
    elif strategy == "tree-edge":
        raw = _unicyclic_tree_edge(n)
    else:
        raise EnumerationError(f"unknown strategy {strategy!r}; use 'forest' or 'tree-edge'")
    seen: dict[bytes, Graph] = {}
    for g in raw:
        seen.setdefault(canonical_key(g), g)
    return tuple(CatalogEntry(k, seen[k], structural_profile(seen[k])) for k in sorted(seen))


@dataclass(frozen=True)
class ClassFilter:
    girth: Optional[int] = None
    diameter: Optional[int] = None
    pendant_count: Optional[int] = None
    max_degree: Optional[int] = None

    def matches(self, report: InvariantReport) -> bool:
        return (
            (self.girth is None or report.girth == self.girth)
            and (self.diameter is None or report.diameter == self.diameter)
            and (self.pendant_count is None or report.pendant_count == self.pendant_count)
            and (self.max_degree is None or report.max_degree == self.max_degree)
        )

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


def _check_n(n: int, ceiling: int) -> None:
    if n < 3:
        raise EnumerationError(f"n={n}: unicyclic graphs need at least 3 vertices")
    if n > ceiling:
        raise EnumerationError(f"n={n} exceeds the enumeration ceiling {ceiling}; raise it with --ceiling")
    if n > KNOWN_MAX:
        warnings.warn(f"enumerating n={n} above {KNOWN_MAX} may take a long time", RuntimeWarning)


def filtered_catalog(
    n: int, filt: Optional[ClassFilter] = None, *, ceiling: int = DEFAULT_CEILING, strategy: str = "forest"
) -> list[CatalogEntry]:
    _check_n(n, ceiling)
    filt = filt or ClassFilter()
    return [e for e in unicyclic_catalog(n, strategy) if filt.matches(e.profile)]


def enumerate_unicyclic(
    n: int, filt: Optional[ClassFilter] = None, *, ceiling: int = DEFAULT_CEILING, strategy: str = "forest"
) -> Iterator[Graph]:
    """One representative per isomorphism class, in canonical-key order."""
    for entry in filtered_catalog(n, filt, ceiling=ceiling, strategy=strategy):
        yield entry.graph


OBJECTIVES = {
    "D'": "degree_distance",
    "dd": "degree_distance",
    "rD'": "reverse_degree_distance",
    "rdd": "reverse_degree_distance",
    "W": "wiener",
    "wiener": "wiener",
}


@dataclass
class ExtremalResult:
    objective: str
    direction: str
    optimum: Optional[int]
    witnesses: list[tuple[bytes, str]] = field(default_factory=list)
    class_size: int = 0

    @property
    def empty(self) -> bool:
        return self.class_size == 0

    @property
    def witness_keys(self) -> set[bytes]:
        return {k for k, _ in self.witnesses}

    def to_dict(self) -> dict:
        return {
            "objective": self.objective,
            "direction": self.direction,
            "optimum": self.optimum,
            "empty": self.empty,
            "class_size": self.class_size,
            "witnesses": [{"key": k.hex(), "graph6": g6} for k, g6 in self.witnesses],
        }


def extremal_search(
    n: int,
    filt: Optional[ClassFilter],
    objective: str,
    direction: str,
    *,
    ceiling: int = DEFAULT_CEILING,
) -> ExtremalResult:
    if objective not in OBJECTIVES:
        raise EnumerationError(f"unknown objective {objective!r}")
    if direction not in ("min", "max"):
        raise EnumerationError(f"direction must be 'min' or 'max', not {direction!r}")
    attr = OBJECTIVES[objective]
    entries = filtered_catalog(n, filt, ceiling=ceiling)
    if not entries:
        return ExtremalResult(objective, direction, None, [], 0)
    values = [getattr(e.profile, attr) for e in entries]
    best = min(values) if direction == "min" else max(values)
    wit = [(e.key, to_graph6(e.graph)) for e, v in zip(entries, values) if v == best]
    return ExtremalResult(objective, direction, best, wit, len(entries))
