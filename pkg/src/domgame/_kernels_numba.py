"""Numba-accelerated kernels.

Same contracts as _kernels_py; the game solver runs as an explicit
stack machine over dense int8 memo tables (one per player, indexed by
the dominated-set mask). Dense tables need 2^n bytes each, so the
accelerated solver covers n <= 24 and larger orders fall back to the
dict-based Python implementation.
"""

from __future__ import annotations

import numpy as np
from numba import njit, uint64

from . import _kernels_py

BACKEND_NAME = "numba"

DENSE_MAX_N = 24

_U0 = uint64(0)
_U1 = uint64(1)


@njit(cache=True, nogil=True)
def _pc(x):
    c = 0
    while x != _U0:
        x &= x - _U1
        c += 1
    return c


@njit(cache=True, nogil=True)
def _tz(x):
    c = 0
    while (x & _U1) == _U0:
        x >>= _U1
        c += 1
    return c


@njit(cache=True, nogil=True)
def _order_moves(closed, n, s, full, mv, gains):
    """Legal moves sorted by descending new-domination count, then index."""
    cnt = 0
    todo = full & ~s
    for u in range(n):
        g = _pc(closed[u] & todo)
        if g > 0:
            pos = cnt
            while pos > 0 and gains[pos - 1] < g:
                gains[pos] = gains[pos - 1]
                mv[pos] = mv[pos - 1]
                pos -= 1
            gains[pos] = g
            mv[pos] = u
            cnt += 1
    return cnt


@njit(cache=True, nogil=True)
def _value_machine(
    closed, n, full, s_start, p_start,
    memo_d, memo_s,
    st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains,
    nodes_in, budget, prune, max_closed,
):
    """Exact value of one state; returns (value, nodes, status)."""
    if s_start == full:
        return (0, nodes_in, 0)
    hit = memo_d[s_start] if p_start == 0 else memo_s[s_start]
    if hit >= 0:
        return (int(hit), nodes_in, 0)
    nodes = nodes_in + 1
    if nodes > budget:
        return (-1, nodes, 1)
    sp = 0
    st_s[0] = s_start
    st_p[0] = p_start
    st_best[0] = 127 if p_start == 0 else -1
    st_idx[0] = 0
    st_cnt[0] = _order_moves(closed, n, s_start, full, st_mov[0], gains)
    ret = -1
    while sp >= 0:
        s = st_s[sp]
        p = st_p[sp]
        best = st_best[sp]
        if ret >= 0:
            cand = 1 + ret
            if p == 0:
                if cand < best:
                    best = cand
            else:
                if cand > best:
                    best = cand
            ret = -1
        pushed = False
        while st_idx[sp] < st_cnt[sp]:
            u = st_mov[sp, st_idx[sp]]
            st_idx[sp] += 1
            child = s | closed[u]
            cp = 1 - p
            if child == full:
                if p == 0:
                    best = 1
                elif best < 1:
                    best = 1
                continue
            cm = memo_d[child] if cp == 0 else memo_s[child]
            if cm >= 0:
                cand = 1 + int(cm)
                if p == 0:
                    if cand < best:
                        best = cand
                else:
                    if cand > best:
                        best = cand
                continue
            if prune:
                x = n - _pc(child)
                if p == 1:
                    # child is Dominator-to-move on a diameter-2 graph:
                    # at most floor((2x+1)/3) moves remain, so it cannot
                    # raise the current maximum.
                    if 1 + (2 * x + 1) // 3 <= best:
                        continue
                else:
                    # each move dominates at most max_closed new vertices
                    if 1 + (x + max_closed - 1) // max_closed >= best:
                        continue
            st_best[sp] = best
            sp += 1
            nodes += 1
            if nodes > budget:
                return (-1, nodes, 1)
            st_s[sp] = child
            st_p[sp] = cp
            st_best[sp] = 127 if cp == 0 else -1
            st_idx[sp] = 0
            st_cnt[sp] = _order_moves(closed, n, child, full, st_mov[sp], gains)
            pushed = True
            break
        if pushed:
            continue
        if p == 0:
            memo_d[s] = best
        else:
            memo_s[s] = best
        ret = best
        sp -= 1
    return (ret, nodes, 0)


@njit(cache=True, nogil=True)
def _solve_root(
    closed, n, s0, first_player, budget, prune, max_closed,
    memo_d, memo_s,
    st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val,
):
    """Root solve with caller-owned scratch; memos must be valid for
    this graph (cleared or filled by a previous solve on the same one)."""
    full = (_U1 << uint64(n)) - _U1
    if s0 == full:
        return (0, 0, _U0, 0)
    nodes = 1
    cnt = _order_moves(closed, n, s0, full, root_mv, gains)
    best = 127 if first_player == 0 else -1
    for r in range(cnt):
        u = root_mv[r]
        child = s0 | closed[u]
        if child == full:
            cand = 1
        else:
            val, nodes, status = _value_machine(
                closed, n, full, child, 1 - first_player,
                memo_d, memo_s,
                st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains,
                nodes, budget, prune, max_closed,
            )
            if status != 0:
                return (-1, nodes, _U0, 1)
            cand = 1 + val
        root_val[r] = cand
        if first_player == 0:
            if cand < best:
                best = cand
        else:
            if cand > best:
                best = cand
    mask = _U0
    for r in range(cnt):
        if root_val[r] == best:
            mask |= _U1 << uint64(root_mv[r])
    return (best, nodes, mask, 0)


@njit(cache=True, nogil=True)
def _new_scratch(n):
    maxd = n + 2
    st_s = np.zeros(maxd, dtype=np.uint64)
    st_p = np.zeros(maxd, dtype=np.int64)
    st_best = np.zeros(maxd, dtype=np.int64)
    st_idx = np.zeros(maxd, dtype=np.int64)
    st_cnt = np.zeros(maxd, dtype=np.int64)
    st_mov = np.zeros((maxd, n), dtype=np.int64)
    gains = np.zeros(n, dtype=np.int64)
    root_mv = np.zeros(n, dtype=np.int64)
    root_val = np.zeros(n, dtype=np.int64)
    return (st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val)


@njit(cache=True, nogil=True)
def _solve_game_dense(closed, n, dominated0, first_player, budget, prune, max_closed):
    """Root solve: value, node count, optimal-first-move mask, status."""
    full = (_U1 << uint64(n)) - _U1
    s0 = uint64(dominated0) & full
    if s0 == full:
        return (0, 0, _U0, 0)
    size = 1 << n
    memo_d = np.full(size, -1, dtype=np.int8)
    memo_s = np.full(size, -1, dtype=np.int8)
    st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val = _new_scratch(n)
    return _solve_root(
        closed, n, s0, first_player, budget, prune, max_closed,
        memo_d, memo_s,
        st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val,
    )


def solve_game(closed_arr, n, dominated0, first_player, budget, prune, max_closed):
    if n > DENSE_MAX_N:
        return _kernels_py.solve_game(
            closed_arr, n, dominated0, first_player, budget, prune, max_closed
        )
    value, nodes, mask, status = _solve_game_dense(
        np.asarray(closed_arr, dtype=np.uint64),
        n, dominated0, first_player, budget, prune, max_closed,
    )
    return (int(value), int(nodes), int(mask), int(status))


@njit(cache=True, nogil=True)
def _solve_all(closed, n):
    full_i = (1 << n) - 1
    vals_d = np.zeros(full_i + 1, dtype=np.int8)
    vals_s = np.zeros(full_i + 1, dtype=np.int8)
    for si in range(full_i - 1, -1, -1):
        s = uint64(si)
        best_d = 127
        best_s = -1
        for u in range(n):
            child = s | closed[u]
            if child == s:
                continue
            cd = 1 + vals_s[child]
            cs = 1 + vals_d[child]
            if cd < best_d:
                best_d = cd
            if cs > best_s:
                best_s = cs
        vals_d[si] = best_d
        vals_s[si] = best_s
    return vals_d, vals_s


def solve_all(closed_arr, n):
    return _solve_all(np.asarray(closed_arr, dtype=np.uint64), n)


@njit(cache=True, nogil=True)
def _domination_fill(closed, n, dist):
    full_i = (1 << n) - 1
    dist[:] = -1
    dist[0] = 0
    for si in range(full_i + 1):
        ds = dist[si]
        if ds < 0:
            continue
        s = uint64(si)
        for u in range(n):
            child = s | closed[u]
            if child == s:
                continue
            if dist[child] < 0 or dist[child] > ds + 1:
                dist[child] = ds + 1
    return int(dist[full_i])


@njit(cache=True, nogil=True)
def _domination_number(closed, n):
    dist = np.empty(1 << n, dtype=np.int8)
    return _domination_fill(closed, n, dist)


def domination_number(closed_arr, n):
    if n > DENSE_MAX_N:
        return _kernels_py.domination_number(closed_arr, n)
    return _domination_number(np.asarray(closed_arr, dtype=np.uint64), n)


@njit(cache=True, nogil=True)
def _connected(adj, n):
    full = (_U1 << uint64(n)) - _U1
    seen = _U1
    frontier = _U1
    while frontier != _U0:
        grow = _U0
        f = frontier
        while f != _U0:
            low = f & (~f + _U1)
            grow |= adj[_tz(low)]
            f ^= low
        frontier = grow & ~seen
        seen |= frontier
    return seen == full


@njit(cache=True, nogil=True)
def _diameter(adj, n):
    full = (_U1 << uint64(n)) - _U1
    worst = 0
    for src in range(n):
        seen = _U1 << uint64(src)
        frontier = seen
        dist = 0
        while True:
            grow = _U0
            f = frontier
            while f != _U0:
                low = f & (~f + _U1)
                grow |= adj[_tz(low)]
                f ^= low
            frontier = grow & ~seen
            if frontier == _U0:
                break
            seen |= frontier
            dist += 1
        if seen != full:
            return -1
        if dist > worst:
            worst = dist
    return worst


@njit(cache=True, nogil=True)
def _twin_free(closed, n):
    for v in range(n):
        for u in range(v):
            if closed[u] == closed[v]:
                return False
    return True


@njit(cache=True, nogil=True)
def _hamiltonian(adj, n):
    if n <= 2:
        return False
    for v in range(n):
        if _pc(adj[v]) < 2:
            return False
    full = (_U1 << uint64(n)) - _U1
    st_cand = np.zeros(n + 1, dtype=np.uint64)
    st_vis = np.zeros(n + 1, dtype=np.uint64)
    sp = 0
    st_vis[0] = _U1
    st_cand[0] = adj[0]
    while sp >= 0:
        cands = st_cand[sp]
        if cands == _U0:
            sp -= 1
            continue
        low = cands & (~cands + _U1)
        st_cand[sp] = cands ^ low
        u = _tz(low)
        vis = st_vis[sp] | low
        if vis == full:
            if adj[u] & _U1:
                return True
            continue
        sp += 1
        st_vis[sp] = vis
        st_cand[sp] = adj[u] & ~vis
    return False


def hamiltonian(adj_arr, n):
    return bool(_hamiltonian(np.asarray(adj_arr, dtype=np.uint64), n))


@njit(cache=True, nogil=True)
def _measure(adj, closed, n, want_twin, want_ham, want_gamma, want_gg, want_ggp, budget):
    degs = np.zeros(n, dtype=np.int64)
    for v in range(n):
        degs[v] = _pc(adj[v])
    m = 0
    delta = 127
    Delta = 0
    for v in range(n):
        m += degs[v]
        if degs[v] < delta:
            delta = degs[v]
        if degs[v] > Delta:
            Delta = degs[v]
    m //= 2
    diam = _diameter(adj, n)
    twin = -1
    if want_twin:
        twin = 1 if _twin_free(closed, n) else 0
    ham = -1
    if want_ham:
        ham = 1 if _hamiltonian(adj, n) else 0
    nodes = 0
    gamma = -1
    gg = -1
    ggp = -1
    if want_gamma:
        gamma = _domination_number(closed, n)
        nodes += 1 << n
    if want_gg or want_ggp:
        size = 1 << n
        memo_d = np.full(size, -1, dtype=np.int8)
        memo_s = np.full(size, -1, dtype=np.int8)
        st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val = _new_scratch(n)
        if want_gg:
            gg, nd, _, status = _solve_root(
                closed, n, _U0, 0, budget, False, Delta + 1,
                memo_d, memo_s,
                st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val,
            )
            nodes += nd
            if status != 0:
                return (m, delta, Delta, diam, twin, ham, gamma, -1, -1, nodes, 1)
        if want_ggp:
            ggp, nd, _, status = _solve_root(
                closed, n, _U0, 1, budget, False, Delta + 1,
                memo_d, memo_s,
                st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val,
            )
            nodes += nd
            if status != 0:
                return (m, delta, Delta, diam, twin, ham, gamma, gg, -1, nodes, 1)
    return (m, delta, Delta, diam, twin, ham, gamma, gg, ggp, nodes, 0)


def measure_graph(adj_arr, closed_arr, n, want_twin, want_ham, want_gamma, want_gg, want_ggp, budget):
    if n > DENSE_MAX_N:
        return _kernels_py.measure_graph(
            adj_arr, closed_arr, n, want_twin, want_ham, want_gamma, want_gg, want_ggp, budget
        )
    out = _measure(
        np.asarray(adj_arr, dtype=np.uint64),
        np.asarray(closed_arr, dtype=np.uint64),
        n, want_twin, want_ham, want_gamma, want_gg, want_ggp, budget,
    )
    return tuple(int(x) for x in out)


@njit(cache=True, nogil=True)
def _scan_labeled(
    n, lo, hi,
    require_diam2, min_delta, max_delta, require_ham,
    want_twin, want_ham, want_gamma, want_gg, want_ggp, budget,
    out_mask, out_m, out_delta, out_Delta, out_diam,
    out_twin, out_ham, out_gamma, out_gg, out_ggp, out_ord,
):
    adj = np.zeros(n, dtype=np.uint64)
    closed = np.zeros(n, dtype=np.uint64)
    size = 1 << n
    memo_d = np.full(size, -1, dtype=np.int8)
    memo_s = np.full(size, -1, dtype=np.int8)
    st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val = _new_scratch(n)
    dist = np.full(size, -1, dtype=np.int8)
    emitted = 0
    connected = 0
    total_nodes = 0
    for mask in range(lo, hi):
        for v in range(n):
            adj[v] = _U0
        t = 0
        for j in range(1, n):
            for i in range(j):
                if mask >> t & 1:
                    adj[i] |= _U1 << uint64(j)
                    adj[j] |= _U1 << uint64(i)
                t += 1
        if not _connected(adj, n):
            continue
        connected += 1
        m = 0
        delta = 127
        Delta = 0
        for v in range(n):
            d = _pc(adj[v])
            m += d
            if d < delta:
                delta = d
            if d > Delta:
                Delta = d
        m //= 2
        if delta < min_delta or Delta > max_delta:
            continue
        diam = _diameter(adj, n)
        if require_diam2 and diam != 2:
            continue
        ham = -1
        if require_ham or want_ham:
            ham = 1 if _hamiltonian(adj, n) else 0
            if require_ham and ham == 0:
                continue
        for v in range(n):
            closed[v] = adj[v] | (_U1 << uint64(v))
        twin = -1
        if want_twin:
            twin = 1 if _twin_free(closed, n) else 0
        gamma = -1
        gg = -1
        ggp = -1
        if want_gamma:
            gamma = _domination_fill(closed, n, dist)
            total_nodes += size
        if want_gg or want_ggp:
            memo_d[:] = -1
            memo_s[:] = -1
        if want_gg:
            gg, nd, _, status = _solve_root(
                closed, n, _U0, 0, budget, False, Delta + 1,
                memo_d, memo_s,
                st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val,
            )
            total_nodes += nd
            if status != 0:
                return (emitted, connected, total_nodes, 1)
        if want_ggp:
            ggp, nd, _, status = _solve_root(
                closed, n, _U0, 1, budget, False, Delta + 1,
                memo_d, memo_s,
                st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val,
            )
            total_nodes += nd
            if status != 0:
                return (emitted, connected, total_nodes, 1)
        out_mask[emitted] = mask
        out_m[emitted] = m
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


def scan_labeled(
    n, lo, hi,
    require_diam2, min_delta, max_delta, require_ham,
    want_twin, want_ham, want_gamma, want_gg, want_ggp, budget,
    out_mask, out_m, out_delta, out_Delta, out_diam,
    out_twin, out_ham, out_gamma, out_gg, out_ggp, out_ord,
):
    out = _scan_labeled(
        n, lo, hi,
        require_diam2, min_delta, max_delta, require_ham,
        want_twin, want_ham, want_gamma, want_gg, want_ggp, budget,
        out_mask, out_m, out_delta, out_Delta, out_diam,
        out_twin, out_ham, out_gamma, out_gg, out_ggp, out_ord,
    )
    return tuple(int(x) for x in out)


@njit(cache=True, nogil=True)
def _rall_scan(n, lo, hi, budget):
    half = (n + 1) // 2
    adj = np.zeros(n, dtype=np.uint64)
    closed = np.zeros(n, dtype=np.uint64)
    size = 1 << n
    memo_d = np.full(size, -1, dtype=np.int8)
    memo_s = np.full(size, -1, dtype=np.int8)
    st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val = _new_scratch(n)
    connected = 0
    skipped = 0
    non_ham = 0
    checked = 0
    n_viol = 0
    viol = np.zeros(64, dtype=np.uint32)
    total_nodes = 0
    for mask in range(lo, hi):
        for v in range(n):
            adj[v] = _U0
        t = 0
        for j in range(1, n):
            for i in range(j):
                if mask >> t & 1:
                    adj[i] |= _U1 << uint64(j)
                    adj[j] |= _U1 << uint64(i)
                t += 1
        if not _connected(adj, n):
            continue
        connected += 1
        delta = 127
        Delta = 0
        for v in range(n):
            d = _pc(adj[v])
            if d < delta:
                delta = d
            if d > Delta:
                Delta = d
        if delta >= 5:
            skipped += 1
            continue
        if not _hamiltonian(adj, n):
            non_ham += 1
            continue
        for v in range(n):
            closed[v] = adj[v] | (_U1 << uint64(v))
        memo_d[:] = -1
        memo_s[:] = -1
        gg, nd, _, status = _solve_root(
            closed, n, _U0, 0, budget, False, Delta + 1,
            memo_d, memo_s,
            st_s, st_p, st_best, st_idx, st_cnt, st_mov, gains, root_mv, root_val,
        )
        total_nodes += nd
        if status != 0:
            return (connected, skipped, non_ham, checked, n_viol, viol, total_nodes, 1)
        checked += 1
        if gg > half:
            if n_viol < 64:
                viol[n_viol] = mask
            n_viol += 1
    return (connected, skipped, non_ham, checked, n_viol, viol, total_nodes, 0)


def rall_scan(n, lo, hi, budget):
    connected, skipped, non_ham, checked, n_viol, viol, nodes, status = _rall_scan(n, lo, hi, budget)
    return (int(connected), int(skipped), int(non_ham), int(checked), int(n_viol), viol, int(nodes), int(status))
