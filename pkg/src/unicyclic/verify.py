"""Executable checks for every lemma, theorem and closed form.

Each claim is a function that walks a parameter grid, records every point it
checks and collects counterexamples. ``verify_claim`` wraps one claim into a
``ClaimReport``; ``verify_all`` runs the whole registry.
"""

from __future__ import annotations

import inspect
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import families as fam
from . import formulas as fm
from .enumeration import (
    DEFAULT_CEILING,
    ClassFilter,
    canonical_key,
    connected_graphs,
    enumerate_trees,
    extremal_search,
    filtered_catalog,
    unicyclic_catalog,
)
from .families import FamilySpec, build_U, legal_ab
from .graph import (
    Graph,
    degree_distance,
    diameter,
    first_zagreb,
    reverse_degree_distance,
    schultz,
    wiener,
)
from .graph6 import to_graph6

FORMULA_N_MAX = 30


class VerifyError(ValueError):
    pass


@dataclass
class ClaimReport:
    claim_id: str
    title: str
    kind: str
    n_max: int
    status: str = "pass"
    checked: int = 0
    range: dict = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "title": self.title,
            "kind": self.kind,
            "n_max": self.n_max,
            "status": self.status,
            "checked": self.checked,
            "range": self.range,
            "skipped": self.skipped,
            "notes": self.notes,
            "counterexamples": self.counterexamples,
            "wall_time": round(self.wall_time, 4),
        }


class _Run:
    """Accumulates grid points and failures for one claim."""

    max_examples = 20

    def __init__(self, report: ClaimReport) -> None:
        self.report = report
        self.failures = 0

    def check(self, ok: bool, params: dict, expected, actual, graphs: tuple[Graph, ...] = ()) -> None:
        self.report.checked += 1
        if ok:
            return
        self.failures += 1
        if len(self.report.counterexamples) < self.max_examples:
            self.report.counterexamples.append(
                {
                    "params": params,
                    "expected": _jsonable(expected),
                    "actual": _jsonable(actual),
                    "graph6": [to_graph6(g) for g in graphs],
                }
            )

    def equal(self, params: dict, expected, actual, graphs: tuple[Graph, ...] = ()) -> None:
        self.check(expected == actual, params, expected, actual, graphs)

    def note(self, text: str) -> None:
        self.report.notes.append(text)

    def skip(self, text: str) -> None:
        self.report.skipped.append(text)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, bytes):
        return x.hex()
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass(frozen=True)
class Claim:
    claim_id: str
    title: str
    kind: str  # identity | inequality | delta | extremal | closed-form | positivity
    min_n: int
    exhaustive: bool
    fn: Callable[[_Run, int], None]
    formula_only: bool = False


REGISTRY: dict[str, Claim] = {}


def _claim(claim_id: str, title: str, kind: str, min_n: int, exhaustive: bool = False, formula_only: bool = False):
    def deco(fn: Callable[[_Run, int], None]) -> Callable[[_Run, int], None]:
        REGISTRY[claim_id] = Claim(claim_id, title, kind, min_n, exhaustive, fn, formula_only)
        return fn

    return deco


def _set_range(run: _Run, **kw) -> None:
    run.report.range.update(kw)


def _witness_graphs(keys) -> tuple[Graph, ...]:
    from .enumeration import graph_from_key

    return tuple(graph_from_key(k) for k in sorted(keys))


def _r(g: Graph) -> int:
    return reverse_degree_distance(g)


# identities on graph invariants


@_claim("gutman-tree", "D' = 4W - n(n-1) on trees", "identity", 2, exhaustive=True)
def _gutman(run: _Run, n_max: int) -> None:
    _set_range(run, n=[2, n_max], family="all trees")
    for n in range(2, n_max + 1):
        for t in enumerate_trees(n):
            run.equal({"n": n}, 4 * wiener(t) - n * (n - 1), degree_distance(t), (t,))


@_claim("rdd-tree", "rD' = 4[(n-1)^2 d/2 - W] + n(n-1) on trees", "identity", 2, exhaustive=True)
def _rdd_tree(run: _Run, n_max: int) -> None:
    _set_range(run, n=[2, n_max], family="all trees")
    for n in range(2, n_max + 1):
        for t in enumerate_trees(n):
            expected = Fraction(4) * (Fraction((n - 1) ** 2 * diameter(t), 2) - wiener(t)) + n * (n - 1)
            run.equal({"n": n}, expected, reverse_degree_distance(t), (t,))


@_claim("schultz", "Schultz index = D' + first Zagreb index", "identity", 2, exhaustive=True)
def _schultz(run: _Run, n_max: int) -> None:
    _set_range(run, n=[2, n_max], family="all trees and unicyclic graphs")
    for n in range(2, n_max + 1):
        graphs = list(enumerate_trees(n))
        if n >= 3:
            graphs += [e.graph for e in unicyclic_catalog(n)]
        for g in graphs:
            run.equal({"n": n}, degree_distance(g) + first_zagreb(g), schultz(g), (g,))


# contraction and pendant lemmas


def _rooted_reps(max_size: int, min_size: int = 1) -> list[tuple[Graph, int]]:
    """One (graph, vertex) per orbit of rooted connected graphs."""
    out = []
    for size in range(min_size, max_size + 1):
        for g in connected_graphs(size):
            seen = set()
            for v in range(g.n):
                key = canonical_key(g, (v,))
                if key not in seen:
                    seen.add(key)
                    out.append((g, v))
    return out


def _pair_reps(g: Graph) -> list[tuple[int, int]]:
    seen = set()
    out = []
    for u in range(g.n):
        for v in range(g.n):
            if u != v:
                key = canonical_key(g, (u, v))
                if key not in seen:
                    seen.add(key)
                    out.append((u, v))
    return out


def _glue(parts: list[tuple[Graph, dict[int, str]]], extra: list[tuple[str, int]] = ()) -> Graph:
    """Disjoint union of ``parts`` with vertices sharing a name identified.

    ``extra`` adds ``count`` pendants to the named vertex.
    """
    label: dict[tuple[int, int], int] = {}
    named: dict[str, int] = {}
    n = 0
    edges = []
    for pi, (g, names) in enumerate(parts):
        for v in range(g.n):
            name = names.get(v)
            if name is not None and name in named:
                label[pi, v] = named[name]
                continue
            label[pi, v] = n
            if name is not None:
                named[name] = n
            n += 1
        edges += [(label[pi, u], label[pi, v]) for u, v in g.edges]
    for name, count in extra:
        for _ in range(count):
            edges.append((named[name], n))
            n += 1
    return Graph.from_edges(n, edges)


@_claim("lemma1", "Contracting a tree between two blocks lowers D'", "inequality", 4)
def _lemma1(run: _Run, n_max: int) -> None:
    max_block = 5
    _set_range(run, n=[4, n_max], blocks="|V(M)|, |V(N)| <= 5", trees="2 <= k <= 4")
    rooted = _rooted_reps(max_block)
    tree_pairs = [(t, uv) for k in range(2, 5) for t in enumerate_trees(k) for uv in _pair_reps(t)]
    point = Graph(1, ((),))
    case_counts = {"i": 0, "ii": 0}
    for t, (x, y) in tree_pairs:
        k = t.n
        for gm, u in rooted:
            for gn, v in [(point, 0)] + [r for r in rooted if r[0].n >= 3]:
                case = "i" if gn.n == 1 else "ii"
                if case == "ii" and gm.n < 3:
                    continue
                if gm.n + gn.n + k - 2 > n_max:
                    continue
                g = _glue([(gm, {u: "u"}), (t, {x: "u", y: "v"}), (gn, {v: "v"})])
                star = _glue([(gm, {u: "u"}), (gn, {v: "u"})], [("u", k - 1)])
                if case == "i" and canonical_key(g) == canonical_key(star):
                    continue
                case_counts[case] += 1
                dg, ds = degree_distance(g), degree_distance(star)
                run.check(dg > ds, {"case": case, "k": k, "M": to_graph6(gm), "N": to_graph6(gn)}, f"> {ds}", dg, (g, star))
    _set_range(run, case_points=case_counts)


@_claim("lemma2", "Splitting pendants between two vertices is never optimal", "inequality", 5)
def _lemma2(run: _Run, n_max: int) -> None:
    max_base = 7
    _set_range(run, n=[5, n_max], base="3 <= |V(G0)| <= 7", pendants="1 <= s, t <= 3")
    for size in range(3, min(max_base, n_max - 2) + 1):
        for g0 in connected_graphs(size):
            for u, v in _pair_reps(g0):
                cache: dict[tuple[int, int], int] = {}

                def dd(s: int, t: int) -> int:
                    if (s, t) not in cache:
                        cache[s, t] = degree_distance(g0.add_pendants(u, s).add_pendants(v, t))
                    return cache[s, t]

                for s in range(1, 4):
                    for t in range(1, 4):
                        if size + s + t > n_max:
                            continue
                        lhs = dd(s, t)
                        rhs = min(dd(s + t, 0), dd(0, s + t))
                        run.check(lhs > rhs, {"G0": to_graph6(g0), "u": u, "v": v, "s": s, "t": t}, f"> {rhs}", lhs)


@_claim("lemma3", "Moving pendants from a path vertex to the cycle: 2ht[2(n2-n1)-1]", "delta", 6)
def _lemma3(run: _Run, n_max: int) -> None:
    _set_range(run, n=[6, n_max], realization="cycle C_m, paths at v_0 and v_j, h pendants")
    for m in range(3, n_max + 1):
        for a in range(1, n_max):
            for b in range(2, n_max):
                for h in range(1, n_max):
                    if m + a + b + h > n_max:
                        continue
                    for j in range(1, m // 2 + 1):
                        for t in range(1, b):
                            g2, g1, params = fm.lemma3_pair(m, a, b, 0, j, t, h)
                            run.equal(
                                {"m": m, "a": a, "b": b, "j": j, **params},
                                fm.delta_lemma3(**params),
                                degree_distance(g2) - degree_distance(g1),
                                (g2, g1),
                            )


@_claim("lemma4", "Moving pendants between cycle vertices: 4h[b(c-t2)-a t1]", "delta", 5)
def _lemma4(run: _Run, n_max: int) -> None:
    _set_range(run, n=[5, n_max], realization="cycle C_m, paths at v_0 and v_j, h pendants at v_0 or v_t")
    for m in range(3, n_max + 1):
        for a in range(1, n_max):
            for b in range(0, n_max):
                for h in range(1, n_max):
                    if m + a + b + h > n_max:
                        continue
                    for j in range(1, m // 2 + 1):
                        for t in range(1, m):
                            gi, gt, params = fm.lemma4_pair(m, a, b, 0, j, t, h)
                            run.equal(
                                {"m": m, "j": j, "t": t, **params},
                                fm.delta_lemma4(**params),
                                degree_distance(gi) - degree_distance(gt),
                                (gi, gt),
                            )
    run.note("b = 0 and b = 1 are included; the formula holds there as well")


def _thm1_grid(n_lo: int, n_hi: int, m_offset: int = 2):
    for n in range(n_lo, n_hi + 1):
        for m in range(3, n - m_offset + 1):
            for d in range(3, n - (m + 1) // 2 + 1):
                yield n, m, d


@_claim("lemma5", "Best split (a,b) of the two paths is (gamma, theta)", "extremal", 5)
def _lemma5(run: _Run, n_max: int) -> None:
    _set_range(run, n=[5, n_max], m="3..n-2", d="3..n-floor((m+1)/2)")
    ties = 0
    for n, m, d in _thm1_grid(5, n_max):
        pairs = legal_ab(n, m, d)
        if not pairs:
            continue
        values = {ab: degree_distance(build_U(FamilySpec(n, m, d, *ab)).graph) for ab in pairs}
        best = min(values.values())
        argmin = {ab for ab, v in values.items() if v == best}
        h = n - d - (m + 1) // 2
        al = Fraction(2 * h * (m // 2), 2 * (n - d) - 1)
        s = d - m // 2
        g, t = fam.gamma_theta(n, m, d) if n >= 6 else _gamma_theta_any(n, m, d)
        expected = {(g, t)}
        if al >= 1 and al.denominator == 1 and (al.numerator - s) % 2:
            if g - 1 >= t + 1:
                expected.add((g - 1, t + 1))
                ties += 1
            else:
                run.note(f"(n,m,d)=({n},{m},{d}): alpha={al} exceeds d-floor(m/2)-1; (gamma-1, theta+1) is not a legal split")
        run.equal({"n": n, "m": m, "d": d, "alpha": str(al)}, expected, argmin)
    _set_range(run, tie_points=ties)


def _gamma_theta_any(n: int, m: int, d: int) -> tuple[int, int]:
    h = n - d - (m + 1) // 2
    al = Fraction(2 * h * (m // 2), 2 * (n - d) - 1)
    s = d - m // 2
    diff = int(min(al + 1, s))
    if (diff - s) % 2:
        diff -= 1
    return (s + diff) // 2, (s - diff) // 2


@_claim("lemma5-delta", "D'(U(a-1,b+1)) - D'(U(a,b)) closed form", "delta", 5)
def _lemma5_delta(run: _Run, n_max: int) -> None:
    _set_range(run, n=[5, n_max], domain="a >= 2, a >= b+1, h >= 0")
    for m in range(3, n_max + 1):
        for a in range(2, n_max):
            for b in range(0, a):
                for h in range(0, n_max):
                    if m + a + b + h > n_max:
                        continue
                    g1, g2 = fm.lemma5_pair(a, b, h, m)
                    run.equal(
                        {"a": a, "b": b, "h": h, "m": m},
                        fm.delta_lemma5(a, b, h, m),
                        degree_distance(g1) - degree_distance(g2),
                        (g1, g2),
                    )


def _class_witnesses(n: int, filt: ClassFilter, objective: str, direction: str, ceiling: int):
    return extremal_search(n, filt, objective, direction, ceiling=ceiling)


@_claim("lemma6", "Minimizers of D' in U(n,m,d) are U(a,b) or U^k(beta,beta)", "extremal", 6, exhaustive=True)
def _lemma6(run: _Run, n_max: int, ceiling: int = DEFAULT_CEILING) -> None:
    _set_range(run, n=[6, n_max])
    for n, m, d in _thm1_grid(6, n_max):
        res = _class_witnesses(n, ClassFilter(girth=m, diameter=d), "D'", "min", ceiling)
        if res.empty:
            continue
        allowed = set()
        for a, b in legal_ab(n, m, d):
            allowed.add(canonical_key(build_U(FamilySpec(n, m, d, a, b)).graph))
            if a == b:
                for k in range(1, m // 4 + 1):
                    allowed.add(canonical_key(build_U(FamilySpec(n, m, d, a, b, k)).graph))
        stray = res.witness_keys - allowed
        run.check(not stray, {"n": n, "m": m, "d": d}, "witnesses within the family", sorted(stray), _witness_graphs(stray))


@_claim("thm1", "Minimum degree distance in U(n,m,d)", "extremal", 6, exhaustive=True)
def _thm1(run: _Run, n_max: int, ceiling: int = DEFAULT_CEILING) -> None:
    _set_range(run, n=[6, n_max], m="3..n-2", d="3..n-floor((m+1)/2)")
    occupancy: dict[str, int] = {"i": 0, "ii": 0, "iii": 0, "iv": 0, "empty": 0}
    for n, m, d in _thm1_grid(6, n_max):
        claim = fam.minimizer_set(n, m, d)
        occupancy[claim.case] += 1
        res = _class_witnesses(n, ClassFilter(girth=m, diameter=d), "D'", "min", ceiling)
        expected = set(claim.canonical_set())
        run.equal(
            {"n": n, "m": m, "d": d, "case": claim.case},
            expected,
            res.witness_keys,
            _witness_graphs(res.witness_keys ^ expected),
        )
    _set_range(run, case_occupancy=occupancy)
    for case in ("ii", "iii"):
        if occupancy[case] == 0:
            run.note(f"case ({case}) has no parameter tuple in this range; it is checked vacuously")


@_claim("cor1", "D'(G) >= D'(U_{n,m,d}) on U(n,m,d)", "extremal", 6, exhaustive=True)
def _cor1(run: _Run, n_max: int, ceiling: int = DEFAULT_CEILING) -> None:
    _set_range(run, n=[6, n_max])
    for n, m, d in _thm1_grid(6, n_max):
        entries = filtered_catalog(n, ClassFilter(girth=m, diameter=d), ceiling=ceiling)
        if not entries:
            continue
        bound = degree_distance(build_U(fam.U(n, m, d)).graph)
        low = min(e.profile.degree_distance for e in entries)
        run.equal({"n": n, "m": m, "d": d}, bound, low)


def _u_any(n: int, m: int, d: int) -> FamilySpec:
    if d == 2:
        return FamilySpec(n, 3, 2, 1, 0)
    return fam.U(n, m, d)


@_claim("lemma7", "rD'(U_{n,m,d}) < rD'(U_{n,m,d+1})", "inequality", 6)
def _lemma7(run: _Run, n_max: int) -> None:
    _set_range(run, n=[6, n_max], d="2 <= d < n-floor((m+1)/2), d-floor(m/2) >= 1")
    for n in range(6, n_max + 1):
        for m in range(3, n - 1):
            for d in range(2, n - (m + 1) // 2):
                if d - m // 2 < 1 or (d == 2 and m != 3):
                    continue
                lo = _r(build_U(_u_any(n, m, d)).graph)
                hi = _r(build_U(fam.U(n, m, d + 1)).graph)
                run.check(lo < hi, {"n": n, "m": m, "d": d}, f"< {hi}", lo)


@_claim("lemma7-delta", "rD'(U_{n,m,d+1}(a+1,b)) - rD'(U_{n,m,d}(a,b)) = 4a^2 - 2(2n-3)a + 2n^2 - 2n", "delta", 6)
def _lemma7_delta(run: _Run, n_max: int) -> None:
    _set_range(run, n=[6, n_max], splits="(gamma, theta) and every legal (a, b)")
    for n in range(6, n_max + 1):
        for m in range(3, n - 1):
            for d in range(3, n - (m + 1) // 2):
                for a, b in legal_ab(n, m, d):
                    g1, g2, a_used = fm.lemma7_pair(n, m, d, a, b)
                    run.equal({"n": n, "m": m, "d": d, "a": a, "b": b}, fm.delta_lemma7(a_used, n), _r(g1) - _r(g2), (g1, g2))


@_claim("lemma7-positivity", "4g^2 - 2(2n-3)g + 2n^2 - 2n > 0", "positivity", 6, formula_only=True)
def _lemma7_pos(run: _Run, n_max: int) -> None:
    _set_range(run, n=[6, n_max], gamma=[1, "n"])
    for n in range(6, n_max + 1):
        for g in range(1, n + 1):
            v = fm.delta_lemma7(g, n)
            run.check(v > 0, {"gamma": g, "n": n}, "> 0", v)


@_claim("thm2", "Maximum rD' among unicyclic graphs of girth m", "extremal", 6, exhaustive=True)
def _thm2(run: _Run, n_max: int, ceiling: int = DEFAULT_CEILING) -> None:
    _set_range(run, n=[6, n_max], m="3..n-2")
    for n in range(6, n_max + 1):
        for m in range(3, n - 1):
            claim = fam.maximizer_set_girth(n, m)
            res = _class_witnesses(n, ClassFilter(girth=m), "rD'", "max", ceiling)
            expected = set(claim.canonical_set())
            run.equal({"n": n, "m": m}, expected, res.witness_keys, _witness_graphs(res.witness_keys ^ expected))


@_claim("lemma8-consistency", "Closed-form Wiener index of U_{n,m,d}(a,b)", "closed-form", 5)
def _lemma8(run: _Run, n_max: int) -> None:
    _set_range(run, n=[5, n_max], m="3..n-1")
    for spec in fam.family_grid(n_max):
        g = build_U(spec).graph
        params = {"n": spec.n, "m": spec.m, "d": spec.d, "a": spec.a, "b": spec.b}
        run.equal(params, fm.wiener_closed(**params), wiener(g), (g,))


@_claim("lemma9-consistency", "Closed-form transmissions of the landmark vertices", "closed-form", 5)
def _lemma9(run: _Run, n_max: int) -> None:
    from .graph import transmission

    _set_range(run, n=[5, n_max], roles=list(fm.TRANSMISSION_ROLES))
    for spec in fam.family_grid(n_max):
        real = build_U(spec)
        params = {"n": spec.n, "m": spec.m, "d": spec.d, "a": spec.a, "b": spec.b}
        for role in fm.TRANSMISSION_ROLES:
            name = f"v{spec.m // 2}" if role == "vhalf" else role
            if name not in real.landmarks:
                continue
            run.equal({**params, "role": role}, fm.transmission_closed(role, **params), transmission(real.graph, real[name]), (real.graph,))


@_claim("lemma10", "rD'(U_{n,m,d}(a,0)) < rD'(U_{n,m-2,d+1}(a+2,0))", "inequality", 6)
def _lemma10(run: _Run, n_max: int) -> None:
    _set_range(run, n=[6, n_max], m="5..n-1")
    for n in range(6, n_max + 1):
        for m in range(5, n):
            big, small = fm.lemma10_pair(n, m)
            run.check(_r(small) < _r(big), {"n": n, "m": m}, f"< {_r(big)}", _r(small), (small, big))


@_claim("lemma10-delta", "girth-reduction difference (a,0) 6m^2 - 2(2n+7)m - 4floor(m^2/4) + 2n^2 + 4n + 10", "delta", 6)
def _lemma10_delta(run: _Run, n_max: int) -> None:
    _set_range(run, n=[6, n_max], m="5..n-1")
    for n in range(6, n_max + 1):
        for m in range(5, n):
            big, small = fm.lemma10_pair(n, m)
            run.equal({"n": n, "m": m}, fm.delta_lemma10(n, m), _r(big) - _r(small), (big, small))


@_claim("lemma10-positivity", "girth-reduction difference for (a,0) is positive", "positivity", 6, formula_only=True)
def _lemma10_pos(run: _Run, n_max: int) -> None:
    _set_range(run, n=[6, n_max], m="5..n-1")
    for n in range(6, n_max + 1):
        for m in range(5, n):
            v = fm.delta_lemma10(n, m)
            run.check(v > 0, {"n": n, "m": m}, "> 0", v)


def _lemma11_grid(n_lo: int, n_hi: int):
    for n in range(n_lo, n_hi + 1):
        for m in range(5, n - 1):
            for d in range(3, n - (m + 1) // 2 + 1):
                h = n - d - (m + 1) // 2
                for a, b in legal_ab(n, m, d):
                    yield n, m, d, h, a, b


@_claim("lemma11", "rD'(U_{n,m,d}(a,b)) < rD'(U_{n,m-2,d+1}(a+1,b+1))", "inequality", 7)
def _lemma11(run: _Run, n_max: int) -> None:
    _set_range(run, n=[7, n_max], m="5..n-2")
    for n, m, d, h, a, b in _lemma11_grid(7, n_max):
        big, small = fm.lemma11_pair(n, m, h, b)
        run.check(_r(small) < _r(big), {"n": n, "m": m, "d": d, "a": a, "b": b}, f"< {_r(big)}", _r(small), (small, big))


@_claim("lemma11-delta", "girth-reduction difference for general (a,b)", "delta", 7)
def _lemma11_delta(run: _Run, n_max: int) -> None:
    _set_range(run, n=[7, n_max], m="5..n-2")
    for n, m, d, h, a, b in _lemma11_grid(7, n_max):
        big, small = fm.lemma11_pair(n, m, h, b)
        run.equal({"n": n, "m": m, "d": d, "a": a, "b": b}, fm.delta_lemma11(n, m, h, b), _r(big) - _r(small), (big, small))


@_claim("lemma11-positivity", "girth-reduction difference for general (a,b) is positive", "positivity", 7, formula_only=True)
def _lemma11_pos(run: _Run, n_max: int) -> None:
    _set_range(run, n=[7, n_max], m="5..n-2", domain="every legal (d, b)")
    for n, m, d, h, a, b in _lemma11_grid(7, n_max):
        v = fm.delta_lemma11(n, m, h, b)
        run.check(v > 0, {"n": n, "m": m, "h": h, "b": b}, "> 0", v)


def _registry_vs_search(run: _Run, claim: fam.ExtremalClaim, n: int, filt: ClassFilter, ceiling: int, params: dict) -> None:
    res = _class_witnesses(n, filt, "rD'", "max", ceiling)
    expected = set(claim.canonical_set())
    run.equal({**params, "case": claim.case}, expected, res.witness_keys, _witness_graphs(res.witness_keys ^ expected))
    for label, reason in claim.excluded:
        run.note(f"{params}: {label} is listed for case ({claim.case}) but {reason}; left out of the registry set")


@_claim("thm3", "Maximum rD' among unicyclic graphs with p pendant vertices", "extremal", 6, exhaustive=True)
def _thm3(run: _Run, n_max: int, ceiling: int = DEFAULT_CEILING) -> None:
    _set_range(run, n=[6, n_max], p="1..n-3 (p = n-3 is the attach-to-triangle entry)")
    for n in range(6, n_max + 1):
        for p in range(1, n - 2):
            claim = fam.maximizer_set_pendants(n, p)
            _registry_vs_search(run, claim, n, ClassFilter(pendant_count=p), ceiling, {"n": n, "p": p})
    run.skip("p = 0: the class is the cycle C_n alone")


@_claim("thm3-gaps", "Differences used to rank the pendant-class candidates", "delta", 6)
def _thm3_gaps(run: _Run, n_max: int) -> None:
    _set_range(run, n=[6, n_max])
    for n in range(6, n_max + 1):
        g1 = build_U(FamilySpec(n, 4, n - 2, n - 4, 0)).graph
        g2 = build_U(FamilySpec(n, 3, n - 2, n - 3, 0)).graph
        run.equal({"n": n, "pair": "p=1"}, 5 * n - 22, _r(g1) - _r(g2), (g1, g2))
        for p in range(2, n - 3):
            g4 = build_U(fam.U(n, 4, n - p)).graph
            g3 = build_U(fam.U(n, 3, n - p)).graph
            actual = _r(g4) - _r(g3)
            if p in (2, 3) and (n - p) % 2 == 0:
                expected = 2 * n - 7 * p + 4
            elif p == n - 4:
                expected = 2 - n
            else:
                expected = 6 * ((n - p - 1) // 2) - n - 4
            run.equal({"n": n, "p": p}, expected, actual, (g4, g3))


@_claim("thm4", "Maximum rD' among unicyclic graphs with maximum degree Delta", "extremal", 6, exhaustive=True)
def _thm4(run: _Run, n_max: int, ceiling: int = DEFAULT_CEILING) -> None:
    _set_range(run, n=[6, n_max], max_degree="2..n-1 (2, n-2, n-1 are the explicit entries)")
    for n in range(6, n_max + 1):
        for delta in range(2, n):
            claim = fam.maximizer_set_maxdeg(n, delta)
            _registry_vs_search(run, claim, n, ClassFilter(max_degree=delta), ceiling, {"n": n, "max_degree": delta})


def _rdd_claim(case: str):
    def fn(run: _Run, n_max: int) -> None:
        _set_range(run, n=[6, n_max])
        literal_off = []
        for n in range(6, n_max + 1):
            for p in fm.rdd_case_domain(case, n):
                spec = fm.rdd_family(case, n, p)
                g = build_U(spec).graph
                params = {"n": n, "p": p, "graph": spec.label()}
                run.equal({**params, "value": "rD'"}, fm.rdd_closed(case, n, p), reverse_degree_distance(g), (g,))
                run.equal({**params, "value": "D'"}, fm.dd_closed(case, n, p), degree_distance(g), (g,))
                if case == "iv":
                    try:
                        literal = fm.rdd_closed(case, n, p, parity="literal")
                    except ArithmeticError:
                        literal = None
                    if literal != reverse_degree_distance(g):
                        literal_off.append((n, p))
        if literal_off:
            run.note(
                f"the rD' display keyed on the parity of n disagrees with BFS at {len(literal_off)} points "
                f"(all with odd p, e.g. (n,p)={literal_off[0]}); keyed on n-p it matches everywhere"
            )

    return fn


for _case in fm.RDD_CASES:
    _claim(f"rdd-closed-{_case}", f"Maximum reverse degree distance value ({_case})", "closed-form", 6, formula_only=True)(
        _rdd_claim(_case)
    )


# running


def claim_ids() -> list[str]:
    return list(REGISTRY)


def verify_claim(claim_id: str, n_max: int, *, ceiling: int = DEFAULT_CEILING) -> ClaimReport:
    if claim_id not in REGISTRY:
        raise VerifyError(f"unknown claim {claim_id!r}; known: {', '.join(REGISTRY)}")
    claim = REGISTRY[claim_id]
    if claim.exhaustive and n_max > ceiling:
        raise VerifyError(f"claim {claim_id} enumerates graphs; n_max={n_max} exceeds the ceiling {ceiling}")
    report = ClaimReport(claim_id, claim.title, claim.kind, n_max)
    start = time.perf_counter()
    if n_max < claim.min_n:
        report.status = "range-too-small"
        report.skipped.append(f"claim needs n >= {claim.min_n}")
    else:
        run = _Run(report)
        if "ceiling" in inspect.signature(claim.fn).parameters:
            claim.fn(run, n_max, ceiling=ceiling)  # type: ignore[call-arg]
        else:
            claim.fn(run, n_max)
        report.status = "fail" if run.failures else "pass"
        if run.failures > len(report.counterexamples):
            report.notes.append(f"{run.failures} failing points, first {len(report.counterexamples)} recorded")
    report.wall_time = time.perf_counter() - start
    return report


def verify_all(n_max: int, *, ceiling: int = DEFAULT_CEILING, formula_n_max: int = FORMULA_N_MAX) -> list[ClaimReport]:
    """Run every registered claim; pure-formula claims use ``max(n_max, formula_n_max)``."""
    reports = []
    for claim_id, claim in REGISTRY.items():
        bound = max(n_max, formula_n_max) if claim.formula_only else n_max
        if claim.exhaustive:
            bound = min(bound, ceiling)
        reports.append(verify_claim(claim_id, bound, ceiling=ceiling))
    return reports


def format_table(reports: list[ClaimReport]) -> str:
    rows = [("claim", "status", "n_max", "points", "seconds")]
    rows += [(r.claim_id, r.status, str(r.n_max), str(r.checked), f"{r.wall_time:.2f}") for r in reports]
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)) for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)
