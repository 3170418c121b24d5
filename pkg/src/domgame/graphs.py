"""Immutable small-graph representation and structural metrics.

Graphs hold one open-neighborhood bit mask per vertex (n <= 64). All
derived quantities (degrees, diameter, twins, Hamiltonicity) are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from ._bits import (
    MAX_VERTICES,
    bits,
    full_mask,
    pair_count,
    pair_index,
    popcount,
    splitmix64_below,
)
from .errors import GraphError

DIAM_DISCONNECTED = None


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices {0, ..., n-1}.

    adj[v] is the open neighborhood N(v) as a bit mask; closed[v] is
    N[v] = N(v) | {v}. Instances are immutable and safe to share.
    """

    n: int
    adj: tuple[int, ...]
    closed: tuple[int, ...] = field(repr=False)

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] & full_mask(v)):
                yield (u, v)

    def closed_array(self) -> np.ndarray:
        return np.array(self.closed, dtype=np.uint64)

    def adj_array(self) -> np.ndarray:
        return np.array(self.adj, dtype=np.uint64)


def _build(n: int, adj: Sequence[int]) -> Graph:
    """Validate adjacency masks and finish the derived fields."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    fm = full_mask(n)
    for v in range(n):
        a = adj[v]
        if a & ~fm:
            raise GraphError(f"adjacency of vertex {v} has bits >= n")
        if a >> v & 1:
            raise GraphError(f"loop at vertex {v}")
        for u in bits(a):
            if not adj[u] >> v & 1:
                raise GraphError(f"asymmetric adjacency between {u} and {v}")
    closed = tuple(adj[v] | 1 << v for v in range(n))
    return Graph(n=n, adj=tuple(adj), closed=closed)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph with the given edge list; duplicates collapse, loops are errors."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range in ({u},{v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _build(n, adj)


def from_pair_mask(n: int, mask: int) -> Graph:
    """Graph whose upper-triangle bit pattern (column order) is mask."""
    adj = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> t & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            t += 1
    return _build(n, adj)


def to_pair_mask(g: Graph) -> int:
    mask = 0
    for u, v in g.edges():
        mask |= 1 << pair_index(u, v)
    return mask


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex permutation v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of the vertex set")
    adj = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            adj[perm[v]] |= 1 << perm[u]
    return _build(g.n, adj)


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
    return seen == full_mask(g.n)


def eccentricity(g: Graph, source: int) -> int | None:
    """Largest BFS distance from source, or None if some vertex is unreachable."""
    seen = 1 << source
    frontier = seen
    dist = 0
    while True:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        if not frontier:
            break
        seen |= frontier
        dist += 1
    if seen != full_mask(g.n):
        return None
    return dist


def diameter(g: Graph) -> int | None:
    """Max pairwise distance; DIAM_DISCONNECTED (None) when not connected."""
    worst = 0
    for v in range(g.n):
        ecc = eccentricity(g, v)
        if ecc is None:
            return DIAM_DISCONNECTED
        worst = max(worst, ecc)
    return worst


def is_diam2(g: Graph) -> bool:
    return diameter(g) == 2


@dataclass(frozen=True)
class GraphMetrics:
    n: int
    m: int
    delta: int
    Delta: int
    diam: int | None
    twin_free: bool
    degree_sequence: tuple[int, ...]


def find_twins(g: Graph) -> tuple[int, int] | None:
    """First pair (u, v), u < v, with N[u] = N[v], or None."""
    for v in range(g.n):
        for u in range(v):
            if g.closed[u] == g.closed[v]:
                return (u, v)
    return None


def degree_stats(g: Graph) -> GraphMetrics:
    degs = sorted(popcount(a) for a in g.adj)
    return GraphMetrics(
        n=g.n,
        m=sum(degs) // 2,
        delta=degs[0],
        Delta=degs[-1],
        diam=diameter(g),
        twin_free=find_twins(g) is None,
        degree_sequence=tuple(degs),
    )


HAMILTONIAN_MAX_N = 16


def is_hamiltonian(g: Graph) -> bool:
    """Exact Hamiltonian-cycle test by pruned backtracking (n <= 16)."""
    if g.n > HAMILTONIAN_MAX_N:
        raise GraphError(f"Hamiltonicity test limited to n <= {HAMILTONIAN_MAX_N}")
    from .backend import kernels

    return bool(kernels.hamiltonian(g.adj_array(), g.n))


@dataclass(frozen=True)
class EnumStats:
    total_labeled: int
    connected_labeled: int


ENUMERATE_MAX_N = 7


def enumerate_labeled_connected(n: int, visitor: Callable[[Graph], None]) -> EnumStats:
    """Visit every connected labeled graph on {0, ..., n-1} once.

    Deterministic order: ascending upper-triangle bit pattern (column
    order). Beyond n = 7 the labeled space is too large; feed a graph6
    stream to the census instead.
    """
    if not 1 <= n <= ENUMERATE_MAX_N:
        raise GraphError(
            f"labeled enumeration limited to n <= {ENUMERATE_MAX_N}; "
            "use a graph6 stream for larger orders"
        )
    total = 1 << pair_count(n)
    connected = 0
    for mask in range(total):
        g = from_pair_mask(n, mask)
        if is_connected(g):
            connected += 1
            visitor(g)
    return EnumStats(total_labeled=total, connected_labeled=connected)


def random_graph(n: int, p_num: int, p_den: int, seed: int) -> Graph:
    """G(n, p) sample with p = p_num/p_den, driven by splitmix64.

    Pairs are drawn in column order with exact rejection sampling, so a
    given (n, p_num, p_den, seed) yields the same graph everywhere.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    if p_den <= 0 or not 0 <= p_num <= p_den:
        raise GraphError(f"invalid edge probability {p_num}/{p_den}")
    state = seed & ((1 << 64) - 1)
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if p_num == 0:
                continue
            if p_num == p_den:
                draw = 0
            else:
                draw, state = splitmix64_below(state, p_den)
            if draw < p_num:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return _build(n, adj)
