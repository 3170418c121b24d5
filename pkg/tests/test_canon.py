from itertools import permutations

import pytest

from domgame import (
    GraphError,
    canonical_form,
    family_build,
    fingerprint,
    from_pair_mask,
    is_connected,
    random_graph,
    relabel,
    to_pair_mask,
)
from domgame._bits import pair_index


def exhaustive_min_mask(g) -> int:
    """Oracle: minimal pair mask over all n! relabelings."""
    best = None
    for perm in permutations(range(g.n)):
        mask = 0
        for u, v in g.edges():
            mask |= 1 << pair_index(perm[u], perm[v])
        key = tuple(
            mask >> pair_index(i, j) & 1
            for j in range(1, g.n)
            for i in range(j)
        )
        if best is None or key < best[0]:
            best = (key, mask)
    return best[1]


def test_relabeling_invariance_c4():
    a = from_pair_mask(4, to_pair_mask(family_build("cycle", 4)))
    b = relabel(a, [0, 2, 1, 3])
    assert canonical_form(a) == canonical_form(b)


def test_distinct_degree_sequences_distinct_keys():
    c4 = family_build("cycle", 4)
    star = family_build("complete_bipartite", 1, 3)
    assert canonical_form(c4) != canonical_form(star)
    assert fingerprint(c4) != fingerprint(star)


def test_connected_classes_on_four_vertices():
    keys = set()
    oracle_masks = set()
    for mask in range(1 << 6):
        g = from_pair_mask(4, mask)
        if not is_connected(g):
            continue
        keys.add(canonical_form(g))
        oracle_masks.add(exhaustive_min_mask(g))
    assert len(keys) == 6
    assert len(oracle_masks) == 6


@pytest.mark.parametrize("n", [5, 6])
def test_matches_exhaustive_oracle(n):
    for seed in range(30):
        g = random_graph(n, 1, 2, seed * 31 + n)
        got = canonical_form(g)
        want = canonical_form(from_pair_mask(n, exhaustive_min_mask(g)))
        assert got == want


def test_random_relabelings_share_key():
    from domgame._bits import splitmix64_below

    state = 2024
    for seed in range(200):
        n = 4 + seed % 5  # orders 4..8
        g = random_graph(n, 1, 2, seed)
        key = canonical_form(g)
        fp = fingerprint(g)
        for _ in range(10):
            perm = list(range(n))
            for i in range(n - 1, 0, -1):
                j, state = splitmix64_below(state, i + 1)
                perm[i], perm[j] = perm[j], perm[i]
            h = relabel(g, perm)
            assert canonical_form(h) == key
            assert fingerprint(h) == fp


def test_distinct_fingerprints_imply_distinct_keys():
    graphs = [random_graph(6, 1, 2, seed) for seed in range(40)]
    for i, a in enumerate(graphs):
        for b in graphs[i + 1:]:
            if fingerprint(a) != fingerprint(b):
                assert canonical_form(a) != canonical_form(b)


def test_key_is_valid_graph6_of_isomorphic_graph():
    g = family_build("petersen")
    from domgame import parse_graph6, degree_stats

    key = canonical_form(g)
    h = parse_graph6(key)
    assert degree_stats(h).degree_sequence == degree_stats(g).degree_sequence
    assert h.m == g.m


def test_rejects_large_order():
    with pytest.raises(GraphError):
        canonical_form(random_graph(11, 1, 2, 0))
