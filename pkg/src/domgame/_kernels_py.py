"""Pure-Python kernel implementations.

Reference semantics for every hot kernel; the numba backend mirrors
these exactly. Inputs arrive as numpy uint64 arrays (shared interface)
and are converted to plain ints, whose bit operations are the fastest
interpreter-level route.

Game-value recurrence: a state is (dominated set S, player to move).
value(V, .) = 0; value(S, Dominator) = 1 + min over legal v of
value(S | N[v], Staller); Staller takes max. A vertex is legal iff it
would dominate at least one new vertex, so previously played vertices
are never legal again and need not be tracked.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

_DOM = 0  # minimizes total moves
_STA = 1  # maximizes total moves


class _Budget(Exception):
    pass


def _ints(arr) -> list[int]:
    return [int(x) for x in arr]


def _order_moves(closed: list[int], n: int, s: int) -> list[int]:
    # descending count of newly dominated vertices, ties by vertex index
    moves = []
    for u in range(n):
        gain = (closed[u] & ~s).bit_count()
        if gain:
            moves.append((-gain, u))
    moves.sort()
    return [u for _, u in moves]


def _value(
    closed: list[int],
    n: int,
    full: int,
    s: int,
    player: int,
    memo: dict[int, int],
    box: list[int],
    budget: int,
    prune: bool,
    max_closed: int,
) -> int:
    if s == full:
        return 0
    key = s << 1 | player
    hit = memo.get(key)
    if hit is not None:
        return hit
    box[0] += 1
    if box[0] > budget:
        raise _Budget
    best = 127 if player == _DOM else -1
    for u in _order_moves(closed, n, s):
        child = s | closed[u]
        if child == full:
            cand = 1
        else:
            ckey = child << 1 | (player ^ 1)
            chit = memo.get(ckey)
            if chit is None and prune:
                x = n - child.bit_count()
                if player == _STA:
                    # child is Dominator-to-move; remaining moves are at
                    # most floor((2x+1)/3) on a diameter-2 graph, so the
                    # child cannot beat the current maximum.
                    if 1 + (2 * x + 1) // 3 <= best:
                        continue
                else:
                    # any move dominates at most max_closed new vertices
                    if 1 + -(-x // max_closed) >= best:
                        continue
            if chit is not None:
                cand = 1 + chit
            else:
                cand = 1 + _value(
                    closed, n, full, child, player ^ 1, memo, box, budget, prune, max_closed
                )
        if player == _DOM:
            if cand < best:
                best = cand
        else:
            if cand > best:
                best = cand
    memo[key] = best
    return best


def _root_solve(
    closed: list[int],
    n: int,
    full: int,
    s0: int,
    first_player: int,
    memo: dict[int, int],
    box: list[int],
    budget: int,
    prune: bool,
    max_closed: int,
) -> tuple[int, int]:
    """Value and complete optimal-move mask from one root state.

    The root's children are always evaluated exactly (no pruning
    skips), so the move mask is the full set of optimal first moves.
    Raises _Budget when the shared node counter runs out.
    """
    box[0] += 1
    if box[0] > budget:
        raise _Budget
    best = 127 if first_player == _DOM else -1
    vals: list[tuple[int, int]] = []
    for u in _order_moves(closed, n, s0):
        child = s0 | closed[u]
        if child == full:
            cand = 1
        else:
            cand = 1 + _value(
                closed, n, full, child, first_player ^ 1, memo, box, budget, prune, max_closed
            )
        vals.append((u, cand))
        if first_player == _DOM:
            best = min(best, cand)
        else:
            best = max(best, cand)
    mask = 0
    for u, cand in vals:
        if cand == best:
            mask |= 1 << u
    return (best, mask)


def solve_game(
    closed_arr,
    n: int,
    dominated0: int,
    first_player: int,
    budget: int,
    prune: bool,
    max_closed: int,
) -> tuple[int, int, int, int]:
    """Memoized minimax from one root state.

    Returns (value, nodes, optimal_first_moves_mask, status) with
    status 0 = ok, 1 = node budget exceeded.
    """
    closed = _ints(closed_arr)
    full = (1 << n) - 1
    s0 = int(dominated0)
    if s0 == full:
        return (0, 0, 0, 0)
    memo: dict[int, int] = {}
    box = [0]
    try:
        best, mask = _root_solve(
            closed, n, full, s0, first_player, memo, box, budget, prune, max_closed
        )
    except _Budget:
        return (0, box[0], 0, 1)
    return (best, box[0], mask, 0)


def solve_all(closed_arr, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Game values of every (dominated set, player) state, bottom-up.

    vals_d[s] / vals_s[s] hold the exact number of remaining moves with
    Dominator / Staller to play. Cost is Theta(2^n * n); callers guard n.
    """
    closed = _ints(closed_arr)
    full = (1 << n) - 1
    vals_d = np.zeros(full + 1, dtype=np.int8)
    vals_s = np.zeros(full + 1, dtype=np.int8)
    vd = vals_d
    vs = vals_s
    for s in range(full - 1, -1, -1):
        best_d = 127
        best_s = -1
        for u in range(n):
            child = s | closed[u]
            if child == s:
                continue
            cd = 1 + vs[child]
            cs = 1 + vd[child]
            if cd < best_d:
                best_d = cd
            if cs > best_s:
                best_s = cs
        vd[s] = best_d
        vs[s] = best_s
    return vals_d, vals_s


def domination_number(closed_arr, n: int) -> int:
    """Minimum dominating set size: shortest OR-composition reaching V."""
    closed = _ints(closed_arr)
    full = (1 << n) - 1
    dist = np.full(full + 1, -1, dtype=np.int8)
    dist[0] = 0
    d = dist
    for s in range(full + 1):
        ds = d[s]
        if ds < 0:
            continue
        for u in range(n):
            child = s | closed[u]
            if child == s:
                continue
            if d[child] < 0 or d[child] > ds + 1:
                d[child] = ds + 1
    return int(dist[full])


def _connected(adj: list[int], n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        f = frontier
        while f:
            low = f & -f
            grow |= adj[low.bit_length() - 1]
            f ^= low
        frontier = grow & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _diameter(adj: list[int], n: int) -> int:
    # -1 when disconnected
    full = (1 << n) - 1
    worst = 0
    for src in range(n):
        seen = 1 << src
        frontier = seen
        dist = 0
        while True:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= adj[low.bit_length() - 1]
                f ^= low
            frontier = grow & ~seen
            if not frontier:
                break
            seen |= frontier
            dist += 1
        if seen != full:
            return -1
        if dist > worst:
            worst = dist
    return worst


def hamiltonian(adj_arr, n: int) -> bool:
    """Backtracking Hamiltonian-cycle test; False for n <= 2."""
    adj = _ints(adj_arr)
    return _hamiltonian(adj, n)


def _hamiltonian(adj: list[int], n: int) -> bool:
    if n <= 2:
        return False
    for a in adj:
        if a.bit_count() < 2:
            return False
    full = (1 << n) - 1

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(adj[v] & 1)
        cand = adj[v] & ~visited
        while cand:
            low = cand & -cand
            u = low.bit_length() - 1
            cand ^= low
            if extend(u, visited | low):
                return True
        return False

    return extend(0, 1)


def _twin_free(closed: list[int], n: int) -> bool:
    for v in range(n):
        for u in range(v):
            if closed[u] == closed[v]:
                return False
    return True


def measure_graph(
    adj_arr,
    closed_arr,
    n: int,
    want_twin: bool,
    want_ham: bool,
    want_gamma: bool,
    want_gg: bool,
    want_ggp: bool,
    budget: int,
) -> tuple[int, int, int, int, int, int, int, int, int, int, int]:
    """Metrics plus requested invariants for one graph.

    Returns (m, delta, Delta, diam, twin_free, ham, gamma, gg, ggp,
    nodes, status); uncomputed fields are -1, diam is -1 when
    disconnected, status 1 means the node budget ran out.
    """
    adj = _ints(adj_arr)
    closed = _ints(closed_arr)
    degs = [a.bit_count() for a in adj]
    m = sum(degs) // 2
    delta = min(degs)
    Delta = max(degs)
    diam = _diameter(adj, n)
    twin = int(_twin_free(closed, n)) if want_twin else -1
    ham = int(_hamiltonian(adj, n)) if want_ham else -1
    nodes = 0
    gamma = gg = ggp = -1
    if want_gamma:
        gamma = domination_number(closed_arr, n)
        nodes += 1 << n
    if want_gg or want_ggp:
        full = (1 << n) - 1
        memo: dict[int, int] = {}
        box = [0]
        try:
            if want_gg:
                gg, _ = _root_solve(closed, n, full, 0, _DOM, memo, box, budget, False, Delta + 1)
            if want_ggp:
                ggp, _ = _root_solve(closed, n, full, 0, _STA, memo, box, budget, False, Delta + 1)
        except _Budget:
            return (m, delta, Delta, diam, twin, ham, gamma, -1, -1, nodes + box[0], 1)
        nodes += box[0]
    return (m, delta, Delta, diam, twin, ham, gamma, gg, ggp, nodes, 0)


def _adj_from_mask(n: int, mask: int) -> list[int]:
    adj = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> t & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            t += 1
    return adj


def scan_labeled(
    n: int,
    lo: int,
    hi: int,
    require_diam2: bool,
    min_delta: int,
    max_delta: int,
    require_ham: bool,
    want_twin: bool,
    want_ham: bool,
    want_gamma: bool,
    want_gg: bool,
    want_ggp: bool,
    budget: int,
    out_mask,
    out_m,
    out_delta,
    out_Delta,
    out_diam,
    out_twin,
    out_ham,
    out_gamma,
    out_gg,
    out_ggp,
    out_ord,
) -> tuple[int, int, int, int]:
    """Measure connected labeled graphs with masks in [lo, hi).

    Fills the out arrays for every graph passing the filters and
    returns (emitted, connected, total_nodes, status). Order is
    ascending mask; out_ord holds each emitted graph's ordinal among
    the connected graphs of this range.
    """
    emitted = 0
    connected = 0
    total_nodes = 0
    for mask in range(lo, hi):
        adj = _adj_from_mask(n, mask)
        if not _connected(adj, n):
            continue
        connected += 1
        degs = [a.bit_count() for a in adj]
        delta = min(degs)
        Delta = max(degs)
        if delta < min_delta or Delta > max_delta:
            continue
        diam = _diameter(adj, n)
        if require_diam2 and diam != 2:
            continue
        closed = [adj[v] | 1 << v for v in range(n)]
        ham = -1
        if require_ham or want_ham:
            ham = int(_hamiltonian(adj, n))
            if require_ham and not ham:
                continue
        twin = int(_twin_free(closed, n)) if want_twin else -1
        gamma = gg = ggp = -1
        if want_gamma:
            gamma = domination_number(np.array(closed, dtype=np.uint64), n)
            total_nodes += 1 << n
        if want_gg or want_ggp:
            full = (1 << n) - 1
            memo: dict[int, int] = {}
            box = [0]
            try:
                if want_gg:
                    gg, _ = _root_solve(closed, n, full, 0, _DOM, memo, box, budget, False, Delta + 1)
                if want_ggp:
                    ggp, _ = _root_solve(closed, n, full, 0, _STA, memo, box, budget, False, Delta + 1)
            except _Budget:
                return (emitted, connected, total_nodes + box[0], 1)
            total_nodes += box[0]
        out_mask[emitted] = mask
        out_m[emitted] = sum(degs) // 2
        out_delta[emitted] = delta
        out_Delta[emitted] = Delta
        out_diam[emitted] = diam
        out_twin[emitted] = twin
        out_ham[emitted] = ham
        out_gamma[emitted] = gamma
        out_gg[emitted] = gg
        out_ggp[emitted] = ggp
        out_ord[emitted] = connected - 1
        emitted += 1
    return (emitted, connected, total_nodes, 0)


def rall_scan(
    n: int, lo: int, hi: int, budget: int
) -> tuple[int, int, int, int, int, np.ndarray, int, int]:
    """Half-of-order check over connected Hamiltonian graphs in [lo, hi).

    Graphs with minimum degree >= 5 are skipped (counted, not solved).
    Returns (connected, skipped_min_degree, non_hamiltonian, checked,
    violations, violating_masks, total_nodes, status).
    """
    half = (n + 1) // 2
    connected = 0
    skipped = 0
    non_ham = 0
    checked = 0
    n_viol = 0
    viol = np.zeros(64, dtype=np.uint32)
    total_nodes = 0
    for mask in range(lo, hi):
        adj = _adj_from_mask(n, mask)
        if not _connected(adj, n):
            continue
        connected += 1
        degs = [a.bit_count() for a in adj]
        if min(degs) >= 5:
            skipped += 1
            continue
        if not _hamiltonian(adj, n):
            non_ham += 1
            continue
        closed_arr = np.array([adj[v] | 1 << v for v in range(n)], dtype=np.uint64)
        gg, nd, _, status = solve_game(closed_arr, n, 0, _DOM, budget, False, max(degs) + 1)
        total_nodes += nd
        if status:
            return (connected, skipped, non_ham, checked, n_viol, viol, total_nodes, 1)
        checked += 1
        if gg > half:
            if n_viol < 64:
                viol[n_viol] = mask
            n_viol += 1
    return (connected, skipped, non_ham, checked, n_viol, viol, total_nodes, 0)
