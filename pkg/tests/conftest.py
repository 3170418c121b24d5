"""Shared test oracles and fixture graphs.

The oracles here are deliberately independent of the package's solve
paths: memo-free game-tree recursion, subset enumeration for dominating
sets, and dict-based BFS for distances.
"""

from __future__ import annotations

from itertools import combinations

import pytest

from domgame import Graph, from_edges, family_build


def brute_game_value(g: Graph, dominated: int, player: int) -> int:
    """Memo-free minimax over the raw game tree (0=Dominator, 1=Staller)."""
    full = (1 << g.n) - 1
    closed = g.closed

    def rec(s: int, p: int) -> int:
        if s == full:
            return 0
        vals = [rec(s | closed[v], 1 - p) for v in range(g.n) if closed[v] & ~s]
        return 1 + (min(vals) if p == 0 else max(vals))

    return rec(dominated, player)


def brute_domination_number(g: Graph) -> int:
    """Smallest k admitting a dominating set, by subset enumeration."""
    full = (1 << g.n) - 1
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            cover = 0
            for v in combo:
                cover |= g.closed[v]
            if cover == full:
                return k
    raise AssertionError("unreachable: V itself dominates")


def bfs_distances(g: Graph, src: int) -> list[int]:
    """Plain queue BFS over adjacency lists; -1 for unreachable."""
    dist = [-1] * g.n
    dist[src] = 0
    queue = [src]
    while queue:
        nxt = []
        for v in queue:
            for u in range(g.n):
                if g.adj[v] >> u & 1 and dist[u] < 0:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        queue = nxt
    return dist


def open_neighborhood_dominates_everywhere(g: Graph) -> bool:
    """Characterization oracle: every N(v) is a dominating set."""
    full = (1 << g.n) - 1
    for v in range(g.n):
        cover = 0
        for u in range(g.n):
            if g.adj[v] >> u & 1:
                cover |= g.closed[u]
        if cover != full:
            return False
    return True


PENTAGON = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]


def fig_eq6_graphs() -> dict[str, Graph]:
    """The five order-6 graphs attaining gamma_g = 3 = ceil(6/2)."""
    return {
        "pentagon_plus_deg2": from_edges(6, PENTAGON + [(4, 5), (5, 2)]),
        "pentagon_plus_deg3_adjacent": from_edges(6, PENTAGON + [(4, 5), (5, 2), (1, 5)]),
        "pentagon_plus_deg3_path": from_edges(6, PENTAGON + [(4, 5), (5, 2), (3, 5)]),
        "K33": family_build("complete_bipartite", 3, 3),
        "prism": from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                                (0, 3), (1, 4), (2, 5)]),
    }


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return family_build("petersen")
