"""Parametric unicyclic families and the registries of claimed extremal graphs.

``U^k_{n,m,d}(a,b)`` is the cycle ``v_0 ... v_{m-1}`` with a path of ``a``
vertices hanging from ``v_0``, a path of ``b`` vertices hanging from
``v_{m//2}`` and ``h = n - d - (m+1)//2`` pendant vertices on ``v_k``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .graph import Graph, cycle_graph, diameter, girth_unicyclic


class FamilyParameterError(ValueError):
    """Family parameters violate one of the defining inequalities."""


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyParameterError(message)


@dataclass(frozen=True)
class FamilySpec:
    n: int
    m: int
    d: int
    a: int
    b: int
    k: int = 0

    @property
    def h(self) -> int:
        return self.n - self.d - (self.m + 1) // 2

    def validate(self) -> None:
        n, m, d, a, b, k = self.n, self.m, self.d, self.a, self.b, self.k
        _check(m >= 3, f"girth m={m} violates m >= 3")
        _check(m <= n - 1, f"girth m={m} violates m <= n-1 (n={n})")
        _check(a >= 1, f"a={a} violates a >= 1")
        _check(b >= 0, f"b={b} violates b >= 0")
        _check(a >= b, f"a={a}, b={b} violates a >= b")
        _check(self.h >= 0, f"d={d} violates d <= n - floor((m+1)/2) = {n - (m + 1) // 2}")
        _check(a + b == d - m // 2, f"a+b={a + b} violates a+b = d - floor(m/2) = {d - m // 2}")
        _check(0 <= k <= m // 4, f"k={k} violates 0 <= k <= floor(m/4) = {m // 4}")

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> FamilySpec:
        return cls(**{key: int(data[key]) for key in ("n", "m", "d", "a", "b")}, k=int(data.get("k", 0)))

    def label(self) -> str:
        sup = f"^{self.k}" if self.k else ""
        return f"U{sup}_{{{self.n},{self.m},{self.d}}}({self.a},{self.b})"


@dataclass(frozen=True)
class Realization:
    """A built graph together with the names of its distinguished vertices."""

    graph: Graph
    landmarks: dict[str, int] = field(hash=False, compare=False)

    def __getitem__(self, name: str) -> int:
        return self.landmarks[name]


class GraphBuilder:
    """Incremental edge-list builder that hands out consecutive vertex labels."""

    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.names: dict[str, int] = {}

    def vertex(self, name: Optional[str] = None) -> int:
        v = self.n
        self.n += 1
        if name is not None:
            self.names[name] = v
        return v

    def cycle(self, m: int) -> list[int]:
        vs = [self.vertex(f"v{i}") for i in range(m)]
        self.edges += [(vs[i], vs[(i + 1) % m]) for i in range(m)]
        return vs

    def path(self, root: int, length: int, prefix: str) -> list[int]:
        """Hang a path of ``length`` new vertices from ``root``; names ``prefix1..prefixL``."""
        out = []
        prev = root
        for i in range(1, length + 1):
            v = self.vertex(f"{prefix}{i}")
            self.edges.append((prev, v))
            out.append(v)
            prev = v
        return out

    def pendants(self, root: int, count: int, prefix: str) -> list[int]:
        out = []
        for i in range(count):
            v = self.vertex(f"{prefix}{i}")
            self.edges.append((root, v))
            out.append(v)
        return out

    def build(self) -> Realization:
        return Realization(Graph.from_edges(self.n, self.edges), dict(self.names))


def assemble_u(m: int, a: int, b: int, h: int, k: int = 0) -> Realization:
    """Build the U-shape without checking the family inequalities.

    ``a < b`` and ``a = 0`` are allowed here; difference formulas compare
    against such intermediate graphs.
    """
    half = m // 2
    bld = GraphBuilder()
    cyc = bld.cycle(m)
    pa = bld.path(cyc[0], a, "a")
    pb = bld.path(cyc[half], b, "b")
    pend = bld.pendants(cyc[k], h, "p")
    if pa:
        bld.names["u0"] = pa[-1]
        bld.names["w"] = pa[-2] if a >= 2 else cyc[0]
    bld.names["u1"] = pb[-1] if pb else cyc[half]
    if pend:
        bld.names["u"] = pend[0]
    return bld.build()


def build_U(spec: FamilySpec) -> Realization:
    spec.validate()
    real = assemble_u(spec.m, spec.a, spec.b, spec.h, spec.k)
    g = real.graph
    assert g.n == spec.n and g.edge_count == spec.n
    assert girth_unicyclic(g) == spec.m
    assert diameter(g) == spec.d, f"{spec.label()} realized diameter {diameter(g)}"
    return real


# selection rule


def _check_thm1_range(n: int, m: int, d: int) -> None:
    _check(n >= 6, f"n={n} violates n >= 6")
    _check(3 <= m <= n - 2, f"m={m} violates 3 <= m <= n-2")
    _check(3 <= d <= n - (m + 1) // 2, f"d={d} violates 3 <= d <= n - floor((m+1)/2)")


def alpha(n: int, m: int, d: int) -> Fraction:
    """``h * floor(m/2) / (n - d - 1/2)`` as an exact fraction."""
    _check_thm1_range(n, m, d)
    h = n - d - (m + 1) // 2
    return Fraction(2 * h * (m // 2), 2 * (n - d) - 1)


def gamma_theta(n: int, m: int, d: int) -> tuple[int, int]:
    s = d - m // 2
    _check(s >= 1, f"d={d} violates d - floor(m/2) >= 1")
    limit = min(alpha(n, m, d) + 1, s)
    diff = int(limit)  # floor, limit > 0
    if (diff - s) % 2:
        diff -= 1
    return (s + diff) // 2, (s - diff) // 2


def U(n: int, m: int, d: int, k: int = 0) -> FamilySpec:
    """The spec of ``U^k_{n,m,d}(gamma, theta)``."""
    g, t = gamma_theta(n, m, d)
    return FamilySpec(n, m, d, g, t, k)


# registries


@dataclass
class ExtremalClaim:
    """A class of unicyclic graphs, an objective, and the graphs claimed optimal."""

    descriptor: str
    objective: str  # "D'" (min) or "rD'" (max)
    direction: str
    specs: list[FamilySpec]
    case: str = ""
    special: list[tuple[str, Graph]] = field(default_factory=list)
    excluded: list[tuple[str, str]] = field(default_factory=list)
    listed: list[FamilySpec] = field(default_factory=list)

    def graphs(self) -> list[tuple[str, Graph]]:
        out = [(s.label(), build_U(s).graph) for s in self.specs]
        return out + list(self.special)

    def canonical_set(self) -> dict[bytes, str]:
        """Claimed graphs keyed by canonical key; isomorphic duplicates collapse."""
        from .enumeration import canonical_key

        result: dict[bytes, str] = {}
        for label, g in self.graphs():
            result.setdefault(canonical_key(g), label)
        return result

    def to_dict(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "objective": self.objective,
            "direction": self.direction,
            "case": self.case,
            "specs": [asdict(s) for s in self.specs],
            "special": [label for label, _ in self.special],
            "excluded": [{"graph": label, "reason": reason} for label, reason in self.excluded],
        }


def minimizer_case(n: int, m: int, d: int) -> str:
    """Which of the four minimum-degree-distance cases applies (or ``"empty"``)."""
    _check_thm1_range(n, m, d)
    s = d - m // 2
    if s < 1:
        return "empty"
    al = alpha(n, m, d)
    even = s % 2 == 0
    if 0 < al < 1 and even:
        return "i"
    if al == 1 and even:
        return "ii"
    if al > 1 and al.denominator == 1 and (al.numerator - s) % 2 == 1:
        return "iii"
    return "iv"


def minimizer_set(n: int, m: int, d: int) -> ExtremalClaim:
    case = minimizer_case(n, m, d)
    desc = f"U({n},{m},{d})"
    if case == "empty":
        # girth m forces diameter >= floor(m/2) + 1 once n > m
        return ExtremalClaim(desc, "D'", "min", [], case)
    s = d - m // 2
    beta = s // 2
    balanced = [FamilySpec(n, m, d, beta, beta, k) for k in range(m // 4 + 1)]
    g, t = gamma_theta(n, m, d)
    if case == "i":
        specs = balanced
    elif case == "ii":
        specs = [FamilySpec(n, m, d, beta + 1, beta - 1)] + balanced
    elif case == "iii":
        specs = [FamilySpec(n, m, d, g, t)]
        # the tied split exists only when gamma - theta was not capped by d - floor(m/2)
        if g - 1 >= t + 1 and g - t == alpha(n, m, d) + 1:
            specs.append(FamilySpec(n, m, d, g - 1, t + 1))
    else:
        specs = [FamilySpec(n, m, d, g, t)]
    return ExtremalClaim(desc, "D'", "min", _dedup(specs), case)


def _dedup(specs: list[FamilySpec]) -> list[FamilySpec]:
    from .enumeration import canonical_key

    seen: set[bytes] = set()
    out = []
    for s in specs:
        key = canonical_key(build_U(s).graph)
        if key not in seen:
            seen.add(key)
            out.append(s)
    return out


def maximizer_set_girth(n: int, m: int) -> ExtremalClaim:
    _check(n >= 6, f"n={n} violates n >= 6")
    _check(3 <= m <= n - 2, f"m={m} violates 3 <= m <= n-2")
    d = n - (m + 1) // 2
    return ExtremalClaim(f"girth {m}, n={n}", "rD'", "max", [U(n, m, d)], "thm2")


def _trichotomy(n: int, lhs: int, d: int) -> tuple[list[FamilySpec], str]:
    # compare lhs with (n + 4) / 6 exactly
    if 6 * lhs > n + 4:
        return [U(n, 4, d)], "gt"
    if 6 * lhs == n + 4:
        return [U(n, 3, d), U(n, 4, d)], "eq"
    return [U(n, 3, d)], "lt"


def maximizer_set_pendants(n: int, p: int) -> ExtremalClaim:
    _check(n >= 6, f"n={n} violates n >= 6")
    _check(1 <= p <= n - 3, f"p={p} violates 1 <= p <= n-3")
    desc = f"U(n={n}, p={p})"
    if p == n - 3:
        specs, case = [U(n, 3, 3)], "special-p=n-3"
    elif p == 1:
        specs, case = [FamilySpec(n, 4, n - 2, n - 4, 0)], "i"
    elif p == 2:
        specs, case = [U(n, 4, n - 2)], "ii"
    elif p == 3 and n == 7:
        specs, case = [U(7, 3, 4)], "iii"
    elif p == 3 and n % 2 == 1:
        specs, case = [U(n, 4, n - 3, k) for k in (0, 1)], "iv"
    else:
        specs, sub = _trichotomy(n, (n - p - 1) // 2, n - p)
        case = f"v-{sub}"
    return _restrict(ExtremalClaim(desc, "rD'", "max", _dedup(specs), case), "pendant_count", p)


def maximizer_set_maxdeg(n: int, delta: int) -> ExtremalClaim:
    _check(n >= 6, f"n={n} violates n >= 6")
    _check(2 <= delta <= n - 1, f"max degree {delta} violates 2 <= max degree <= n-1")
    desc = f"U(n={n}, max degree={delta})"
    if delta == 2:
        return ExtremalClaim(desc, "rD'", "max", [], "special-cycle", [(f"C_{n}", cycle_graph(n))])
    if delta == n - 1:
        specs, case = [FamilySpec(n, 3, 2, 1, 0)], "special-max-degree=n-1"
    elif delta == n - 2:
        specs, case = [U(n, 3, 3)], "special-max-degree=n-2"
    elif delta == 3:
        specs, case = [U(n, 4, n - 2)], "i"
    elif delta == 4 and n == 7:
        specs, case = [U(7, 3, 4)], "ii"
    elif delta == 4 and n % 2 == 1:
        specs, case = [U(n, 4, n - 3, k) for k in (0, 1)], "iii"
    else:
        specs, sub = _trichotomy(n, (n - delta) // 2, n - delta + 1)
        case = f"iv-{sub}"
    return _restrict(ExtremalClaim(desc, "rD'", "max", _dedup(specs), case), "max_degree", delta)


def _restrict(claim: ExtremalClaim, attr: str, value: int) -> ExtremalClaim:
    """Drop listed graphs that fall outside the class; keep the full list in ``listed``."""
    from .graph import structural_profile

    claim.listed = list(claim.specs)
    kept = []
    for s in claim.specs:
        actual = getattr(structural_profile(build_U(s).graph), attr)
        if actual == value:
            kept.append(s)
        else:
            claim.excluded.append((s.label(), f"its {attr.replace('_', ' ')} is {actual}, not {value}"))
    claim.specs = kept
    return claim


def legal_ab(n: int, m: int, d: int) -> list[tuple[int, int]]:
    """All ``(a, b)`` with ``a >= b >= 0``, ``a >= 1`` and ``a + b = d - floor(m/2)``."""
    s = d - m // 2
    return [(s - b, b) for b in range(0, s // 2 + 1) if s - b >= 1 and s - b >= b]


def family_grid(n_max: int, n_min: int = 5, m_max_offset: int = 1):
    """Every valid ``FamilySpec`` with ``k = 0`` and ``n_min <= n <= n_max``."""
    for n in range(n_min, n_max + 1):
        for m in range(3, n - m_max_offset + 1):
            for d in range(3, n - (m + 1) // 2 + 1):
                for a, b in legal_ab(n, m, d):
                    yield FamilySpec(n, m, d, a, b)
