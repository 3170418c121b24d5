"""Constructors for named graph families used throughout the suite."""

from __future__ import annotations

from .errors import GraphError
from .graphs import Graph, from_edges


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite graph needs both sides >= 1")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer pentagon
        edges.append((i, i + 5))                # spokes
        edges.append((i + 5, (i + 2) % 5 + 5))  # inner pentagram
    return from_edges(10, edges)


def mycielski_complete(k: int) -> Graph:
    """Mycielskian of the complete graph on k vertices (n = 2k + 1).

    Star center c with leaves u_1..u_k, clique v_1..v_k, plus all cross
    edges v_i u_j with i != j. Twin-free, diameter 2, max degree n - 3.
    """
    if k < 2:
        raise GraphError("mycielski_complete needs k >= 2")
    # layout: 0 = star center, 1..k = leaves u, k+1..2k = clique v
    edges = [(0, u) for u in range(1, k + 1)]
    edges += [(k + i, k + j) for j in range(1, k + 1) for i in range(1, j)]
    edges += [
        (k + i, j)
        for i in range(1, k + 1)
        for j in range(1, k + 1)
        if i != j
    ]
    return from_edges(2 * k + 1, edges)


def h_graph(k: int, t: int = 2) -> Graph:
    """Complete bipartite core with a dominating apex and a twin pendant.

    Start from K_{k,k} with sides a_1..a_k and b_1..b_k, pick the
    adjacent pair u = a_1, v = b_1, join a new vertex w to all of the
    K_{k,k}, then attach x and y adjacent to each other and to u, v.
    With t = 2 that is all (n = 2k + 3, max degree n - 3). With t = 3
    the edge xy is replaced by a triangle x, y, z whose third vertex z
    gets the same attachment {x, y, u, v}, making x, y, z mutual twins
    (n = 2k + 4, max degree n - 4).
    """
    if k < 4:
        raise GraphError("h_graph needs k >= 4")
    if t not in (2, 3):
        raise GraphError("h_graph variant t must be 2 or 3")
    # layout: 0..k-1 = side a, k..2k-1 = side b, 2k = w, 2k+1 = x, 2k+2 = y
    u, v, w, x, y = 0, k, 2 * k, 2 * k + 1, 2 * k + 2
    edges = [(i, k + j) for i in range(k) for j in range(k)]
    edges += [(w, i) for i in range(2 * k)]
    edges += [(x, y), (x, u), (x, v), (y, u), (y, v)]
    n = 2 * k + 3
    if t == 3:
        z = 2 * k + 3
        edges += [(z, x), (z, y), (z, u), (z, v)]
        n = 2 * k + 4
    return from_edges(n, edges)


_FIXED = {
    "petersen": petersen,
}

_ONE_PARAM = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "mycielski_complete": mycielski_complete,
}

_TWO_PARAM = {
    "complete_bipartite": complete_bipartite,
    "h_graph": h_graph,
}

FAMILY_NAMES = sorted({*_FIXED, *_ONE_PARAM, *_TWO_PARAM})


def family_build(family: str, *params: int) -> Graph:
    """Build a family member by tag, e.g. family_build('cycle', 5)."""
    if family in _FIXED:
        if params:
            raise GraphError(f"family {family!r} takes no parameter")
        return _FIXED[family]()
    if family in _ONE_PARAM:
        if len(params) != 1:
            raise GraphError(f"family {family!r} takes exactly one parameter")
        return _ONE_PARAM[family](params[0])
    if family in _TWO_PARAM:
        if family == "h_graph" and len(params) == 1:
            return h_graph(params[0])
        if len(params) != 2:
            raise GraphError(f"family {family!r} takes two parameters")
        return _TWO_PARAM[family](*params)
    raise GraphError(f"unknown family {family!r}; known: {', '.join(FAMILY_NAMES)}")
