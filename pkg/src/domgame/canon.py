"""Exact canonical keys for isomorphism deduplication (small n).

The key is the lexicographically minimal graph6 string over all vertex
relabelings, found by positional backtracking with prefix pruning. A
cheap isomorphism-invariant fingerprint is exposed separately so
callers can partition candidates before paying for exact keys;
fingerprints alone never decide equality.
"""

from __future__ import annotations

from .errors import GraphError
from ._bits import pair_index, popcount
from .graph6 import encode_pair_mask
from .graphs import Graph

CANON_MAX_N = 10


def fingerprint(g: Graph) -> tuple:
    """Isomorphism-invariant signature: (n, m, degrees, neighbor degrees)."""
    degs = [popcount(a) for a in g.adj]
    nbr_degs = []
    for v in range(g.n):
        row = sorted(degs[u] for u in range(g.n) if g.adj[v] >> u & 1)
        nbr_degs.append(tuple(row))
    return (g.n, sum(degs) // 2, tuple(sorted(degs)), tuple(sorted(nbr_degs)))


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the lexicographically minimal relabeling of g."""
    if g.n > CANON_MAX_N:
        raise GraphError(f"canonical form limited to n <= {CANON_MAX_N}")
    n = g.n
    if n == 1:
        return encode_pair_mask(1, 0)
    adj = g.adj

    # blocks[k-1] packs the adjacency bits between position k and
    # positions 0..k-1, earliest position as most significant bit, so
    # integer comparison of blocks equals bit-string comparison.
    best: list[int] | None = None
    order = [0] * n
    cur = [0] * (n - 1)

    def search(k: int, used: int, tight: bool) -> None:
        nonlocal best
        if k == n:
            if best is None or cur < best:
                best = cur.copy()
            return
        cands = []
        for w in range(n):
            if used >> w & 1:
                continue
            blk = 0
            for i in range(k):
                blk = blk << 1 | (adj[order[i]] >> w & 1)
            cands.append((blk, w))
        cands.sort()
        min_blk = cands[0][0]
        for blk, w in cands:
            if best is not None and tight:
                if blk > best[k - 1]:
                    break
                child_tight = blk == best[k - 1]
            else:
                if blk > min_blk:
                    break
                child_tight = False
            order[k] = w
            cur[k - 1] = blk
            search(k + 1, used | 1 << w, child_tight)

    for start in range(n):
        order[0] = start
        search(1, 1 << start, best is not None)

    assert best is not None
    mask = 0
    for k in range(1, n):
        blk = best[k - 1]
        for i in range(k):
            if blk >> (k - 1 - i) & 1:
                mask |= 1 << pair_index(i, k)
    return encode_pair_mask(n, mask)
