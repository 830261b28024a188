"""Closed forms for Wiener indices, transmissions and invariant differences.

Every evaluator works in exact rationals and refuses to return a
non-integer where an integer is expected. Each difference formula has a
``*_pair`` builder returning the two concrete graphs whose invariant
difference it predicts.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .families import FamilyParameterError, FamilySpec, GraphBuilder, assemble_u, build_U, gamma_theta
from .graph import Graph

F = Fraction


def _c(x: int, k: int) -> int:
    return comb(x, k) if x >= k else 0


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    return value.numerator


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyParameterError(message)


def _check_u_params(n: int, m: int, d: int, a: int, b: int) -> int:
    _need(n >= 5, f"n={n} violates n >= 5")
    _need(3 <= m <= n - 1, f"m={m} violates 3 <= m <= n-1")
    _need(3 <= d <= n - (m + 1) // 2, f"d={d} violates 3 <= d <= n - floor((m+1)/2)")
    _need(a + b == d - m // 2, f"a+b={a + b} violates a+b = d - floor(m/2)")
    _need(a >= b >= 0 and a >= 1, f"(a,b)=({a},{b}) violates a >= b >= 0, a >= 1")
    return n - d - (m + 1) // 2


def wiener_closed(n: int, m: int, d: int, a: int, b: int) -> int:
    h = _check_u_params(n, m, d, a, b)
    q = m * m // 4
    half = m // 2
    w = F(2 * (a + b) + m, 2) * q
    w += _c(a + 1, 3) + _c(b + 1, 3)
    w += m * (_c(a + 1, 2) + _c(b + 1, 2))
    w += F(a * b * (2 * half + a + b + 2), 2)
    w += h * (q + m + F(a * (a + 3), 2) + F(b * (2 * half + b + 3), 2))
    w += h * (h - 1)
    return _integral(w, "Wiener closed form")


TRANSMISSION_ROLES = ("v0", "vhalf", "u", "u0", "u1")


def transmission_closed(role: str, n: int, m: int, d: int, a: int, b: int) -> int:
    """Transmission of a landmark vertex of ``U_{n,m,d}(a,b)``.

    Roles: ``v0``, ``vhalf`` (the cycle vertex ``v_{m//2}``), ``u`` (a pendant
    on ``v_0``), ``u0`` and ``u1`` (path ends).
    """
    h = _check_u_params(n, m, d, a, b)
    q = m * m // 4
    half = m // 2
    if role == "v0":
        t = q + F(a * (a + 1), 2) + F(b * (b + 1 + 2 * half), 2) + h
    elif role == "vhalf":
        t = q + F(a * (a + 1 + 2 * half), 2) + F(b * (b + 1), 2) + h * (1 + half)
    elif role == "u":
        _need(h >= 1, "role u needs at least one pendant vertex (h >= 1)")
        t = q + m + F(a * (a + 3), 2) + F(b * (2 * half + b + 3), 2) + 2 * (h - 1)
    elif role == "u0":
        t = q + a * (F(a - 1, 2) + m) + F(b * (2 * a + 2 * half + b + 1), 2) + h * (a + 1)
    elif role == "u1":
        t = q + b * (F(b - 1, 2) + m) + F(a * (2 * b + 2 * half + a + 1), 2) + h * (b + half + 1)
    else:
        raise FamilyParameterError(f"unknown role {role!r}; expected one of {TRANSMISSION_ROLES}")
    return _integral(t, f"transmission of {role}")


# pendant-moving differences


def delta_lemma3(h: int, t: int, n1: int, n2: int) -> int:
    """``D'(pendants on v_j) - D'(pendants on u_t)`` = 2ht[2(n2 - n1) - 1]."""
    return 2 * h * t * (2 * (n2 - n1) - 1)


def _cycle_two_paths(m: int, a: int, b: int, i: int, j: int) -> GraphBuilder:
    bld = GraphBuilder()
    cyc = bld.cycle(m)
    bld.path(cyc[i], a, "a")
    bld.path(cyc[j], b, "b")
    return bld


def lemma3_pair(m: int, a: int, b: int, i: int, j: int, t: int, h: int) -> tuple[Graph, Graph, dict]:
    """``(G2, G1, params)``: h pendants on ``v_j`` versus on ``u_t`` of the ``b``-path."""
    _need(m >= 3 and a >= 1 and b >= 2, "needs m >= 3, a >= 1, b >= 2")
    _need(i != j and 0 <= i < m and 0 <= j < m, "needs distinct cycle positions i, j")
    _need(1 <= t <= b - 1, f"t={t} violates 1 <= t <= b-1")
    on_cycle = _cycle_two_paths(m, a, b, i, j)
    on_cycle.pendants(on_cycle.names[f"v{j}"], h, "p")
    on_path = _cycle_two_paths(m, a, b, i, j)
    on_path.pendants(on_path.names[f"b{t}"], h, "p")
    params = {"h": h, "t": t, "n1": a + m - 1, "n2": b - t}
    return on_cycle.build().graph, on_path.build().graph, params


def delta_lemma4(h: int, a: int, b: int, c: int, t1: int, t2: int) -> int:
    """``D'(pendants on v_i) - D'(pendants on v_t)`` = 4h[b(c - t2) - a t1]."""
    return 4 * h * (b * (c - t2) - a * t1)


def _cyc_dist(m: int, x: int, y: int) -> int:
    k = abs(x - y) % m
    return min(k, m - k)


def lemma4_pair(m: int, a: int, b: int, i: int, j: int, t: int, h: int) -> tuple[Graph, Graph, dict]:
    """``(G at v_i, G at v_t, params)`` with pendants moved between cycle vertices."""
    _need(i != j and t != i, "needs i != j and t != i")
    _need(a >= 1 and b >= 0, "needs a >= 1 and b >= 0")
    graphs = []
    for where in (i, t):
        bld = _cycle_two_paths(m, a, b, i, j)
        bld.pendants(bld.names[f"v{where}"], h, "p")
        graphs.append(bld.build().graph)
    params = {"h": h, "a": a, "b": b, "c": _cyc_dist(m, i, j), "t1": _cyc_dist(m, i, t), "t2": _cyc_dist(m, j, t)}
    return graphs[0], graphs[1], params


def delta_lemma5(a: int, b: int, h: int, m: int) -> Fraction:
    """``D'(U(a-1, b+1)) - D'(U(a, b))`` at fixed ``n, m, d``."""
    _need(a >= 1, "a must be at least 1")
    value = 4 * ((1 - a + b) * (h + F((m - 1) // 2) + F(1, 2)) + h * (m // 2))
    _integral(value, "path-split difference")
    return value


def lemma5_pair(a: int, b: int, h: int, m: int) -> tuple[Graph, Graph]:
    """``(U(a-1, b+1), U(a, b))``; the first may have its longer path on ``v_{m//2}``."""
    _need(a >= 2 and a >= b + 1, "needs a >= 2 and a >= b+1 so both graphs exist")
    return assemble_u(m, a - 1, b + 1, h).graph, assemble_u(m, a, b, h).graph


def delta_lemma7(gamma: int, n: int) -> int:
    """``rD'(U_{n,m,d+1}(gamma+1, theta)) - rD'(U_{n,m,d}(gamma, theta))``."""
    return 4 * gamma * gamma - 2 * (2 * n - 3) * gamma + 2 * n * n - 2 * n


def lemma7_pair(n: int, m: int, d: int, a: int | None = None, b: int | None = None) -> tuple[Graph, Graph, int]:
    """``(U_{n,m,d+1}(a+1,b), U_{n,m,d}(a,b), a)``; ``(a,b)`` defaults to ``(gamma, theta)``."""
    _need(d + 1 <= n - (m + 1) // 2, "d+1 must not exceed n - floor((m+1)/2)")
    if a is None or b is None:
        a, b = gamma_theta(n, m, d)
    h = n - d - (m + 1) // 2
    return assemble_u(m, a + 1, b, h - 1).graph, assemble_u(m, a, b, h).graph, a


def delta_lemma10(n: int, m: int) -> int:
    _need(5 <= m <= n - 1, f"m={m} violates 5 <= m <= n-1")
    return 6 * m * m - 2 * (2 * n + 7) * m - 4 * (m * m // 4) + 2 * n * n + 4 * n + 10


def lemma10_pair(n: int, m: int) -> tuple[Graph, Graph]:
    """``(U_{n,m-2,d+1}(a+2,0), U_{n,m,d}(a,0))`` with ``d = n - (m+1)//2``, ``a = n - m``."""
    _need(5 <= m <= n - 1, f"m={m} violates 5 <= m <= n-1")
    d = n - (m + 1) // 2
    a = n - m
    big = build_U(FamilySpec(n, m - 2, d + 1, a + 2, 0)).graph
    small = build_U(FamilySpec(n, m, d, a, 0)).graph
    return big, small


def delta_lemma11(n: int, m: int, h: int, b: int) -> int:
    _need(5 <= m <= n - 2, f"m={m} violates 5 <= m <= n-2")
    half = m // 2
    value = (
        4 * b * b
        - 4 * (n - m - 2 * h) * b
        + 2 * n * n
        - 4 * n * (F(half + h) + F(1, 2))
        + 2 * m * m
        + 8 * m * h
        + 4 * (m - 1) * (half - 1)
        - 4 * (m * m // 4)
        + 4 * h * h
        - 6 * h
    )
    return _integral(value, "girth-reduction difference")


def lemma11_pair(n: int, m: int, h: int, b: int) -> tuple[Graph, Graph]:
    """``(U_{n,m-2,d+1}(a+1,b+1), U_{n,m,d}(a,b))`` determined by ``n, m, h, b``."""
    d = n - h - (m + 1) // 2
    a = d - m // 2 - b
    big = build_U(FamilySpec(n, m - 2, d + 1, a + 1, b + 1)).graph
    small = build_U(FamilySpec(n, m, d, a, b)).graph
    return big, small


# maximum reverse degree distance values

RDD_CASES = ("i", "ii", "iii", "iv", "v")


def rdd_family(case: str, n: int, p: int | None = None) -> FamilySpec:
    """The graph whose reverse degree distance the closed form ``case`` describes."""
    from .families import U

    if case == "i":
        return FamilySpec(n, 4, n - 2, n - 4, 0)
    if case == "ii":
        return U(n, 4, n - 2)
    if case == "iii":
        _need(n % 2 == 1, "case iii needs odd n")
        return U(n, 4, n - 3)
    _need(p is not None, f"case {case} needs p")
    assert p is not None
    if case == "iv":
        return U(n, 4, n - p)
    if case == "v":
        return U(n, 3, n - p)
    raise FamilyParameterError(f"unknown case {case!r}")


def rdd_case_domain(case: str, n: int) -> list[int | None]:
    """Legal ``p`` values of a case at order ``n`` (``[None]`` when ``p`` is not a parameter)."""
    if n < 6:
        return []
    if case in ("i", "ii"):
        return [None]
    if case == "iii":
        return [None] if n % 2 == 1 and n >= 7 else []
    ps = [p for p in range(3, n - 3) if p >= 4 or n % 2 == 0]
    return ps


def dd_closed(case: str, n: int, p: int | None = None) -> int:
    """Degree distance of the case's family, as displayed next to each maximum value."""
    if case == "i":
        v = F(2, 3) * n**3 - F(35, 3) * n + 36
    elif case == "ii":
        v = F(2, 3) * n**3 - F(3, 2) * n**2 + F(1, 3) * n + (12 if n % 2 == 0 else F(27, 2))
    elif case == "iii":
        _need(n % 2 == 1, "case iii needs odd n")
        v = F(2, 3) * n**3 - F(5, 2) * n**2 + F(10, 3) * n + F(47, 2)
    elif case in ("iv", "v"):
        _need(p is not None, f"case {case} needs p")
        assert p is not None
        even = (n - p) % 2 == 0
        base = F(2, 3) * n**3 - (p - F(1, 2)) * n**2 + F(p**3, 3) - F(p**2, 2)
        if case == "iv":
            base += (3 * p - F(17, 3)) * n
            v = base + (F(11 * p, 3) + 10 if even else F(14 * p, 3) + F(7, 2))
        else:
            base += (3 * p - F(11, 3)) * n
            v = base + (F(2 * p, 3) if even else F(5 * p, 3) - F(7, 2))
    else:
        raise FamilyParameterError(f"unknown case {case!r}")
    return _integral(v, f"degree distance case {case}")


def rdd_closed(case: str, n: int, p: int | None = None, *, parity: str = "n-p") -> int:
    """Maximum reverse degree distance for the families of the pendant/max-degree theorems.

    Cases iv and v branch on a parity. ``parity="n-p"`` keys the branch on
    ``n - p`` (as the accompanying degree-distance display does);
    ``parity="literal"`` keys case iv on ``n`` exactly as its
    reverse-degree-distance display is labelled.
    """
    if case == "i":
        v = F(4, 3) * n**3 - 6 * n**2 + F(47, 3) * n - 36
    elif case == "ii":
        v = F(4, 3) * n**3 - F(9, 2) * n**2 + F(11, 3) * n - (12 if n % 2 == 0 else F(27, 2))
    elif case == "iii":
        _need(n % 2 == 1, "case iii needs odd n")
        v = F(4, 3) * n**3 - F(11, 2) * n**2 + F(8, 3) * n - F(47, 2)
    elif case in ("iv", "v"):
        _need(p is not None, f"case {case} needs p")
        assert p is not None
        if parity == "literal" and case == "iv":
            even = n % 2 == 0
        elif parity in ("n-p", "literal"):
            even = (n - p) % 2 == 0
        else:
            raise FamilyParameterError(f"parity must be 'n-p' or 'literal', not {parity!r}")
        base = F(4, 3) * n**3 - (p + F(5, 2)) * n**2 - F(p**3, 3) + F(p**2, 2)
        if case == "iv":
            base -= (p - F(17, 3)) * n
            v = base - (F(11 * p, 3) + 10 if even else F(14 * p, 3) + F(7, 2))
        else:
            base -= (p - F(11, 3)) * n
            v = base - (F(2 * p, 3) if even else F(5 * p, 3) - F(7, 2))
    else:
        raise FamilyParameterError(f"unknown case {case!r}")
    return _integral(v, f"reverse degree distance case {case}")
