import pytest

from domgame import (
    BudgetExceededError,
    GameState,
    Player,
    domination_number,
    enumerate_labeled_connected,
    family_build,
    from_edges,
    game_value_table,
    gamma_g,
    gamma_g_partial,
    gamma_g_prime,
    greedy_trace,
    is_diam2,
    legal_moves,
    random_graph,
    relabel,
    solve,
    verify_ui_bounds,
)
from domgame._bits import full_mask
from conftest import brute_domination_number, brute_game_value


def test_legal_moves():
    c4 = family_build("cycle", 4)
    assert legal_moves(GameState(c4, 0, Player.DOMINATOR)) == 0b1111
    assert legal_moves(GameState(c4, 0b1111, Player.DOMINATOR)) == 0
    p3 = family_build("path", 3)
    assert legal_moves(GameState(p3, p3.closed[1], Player.STALLER)) == 0


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_complete_graphs_one_move(n):
    assert gamma_g(family_build("complete", n)) == 1


def test_petersen_values(petersen):
    assert gamma_g(petersen) == 5
    assert domination_number(petersen) == 3


def test_p4():
    g = family_build("path", 4)
    assert gamma_g(g) == 2
    assert brute_game_value(g, 0, 0) == 2


def test_cycles():
    assert gamma_g(family_build("cycle", 4)) == 2
    assert gamma_g(family_build("cycle", 5)) == 3
    assert gamma_g_prime(family_build("cycle", 4)) == 2


def test_partial_games():
    c4 = family_build("cycle", 4)
    assert gamma_g_partial(c4, full_mask(4), Player.DOMINATOR) == 0
    # one closed neighborhood dominated, Staller to move: one vertex left
    assert gamma_g_partial(c4, c4.closed[0], Player.STALLER) == 1
    assert gamma_g_partial(c4, 0, Player.DOMINATOR) == gamma_g(c4)
    # single undominated vertex, Dominator to move
    pet = family_build("petersen")
    assert gamma_g_partial(pet, full_mask(10) ^ 1, Player.DOMINATOR) == 1


def test_solve_result_contract():
    g = family_build("cycle", 5)
    res = solve(GameState(g, 0, Player.DOMINATOR))
    assert res.value == 3
    assert res.optimal_first_moves  # non-empty when the game is live
    assert res.nodes_visited > 0
    # every claimed-optimal move achieves the value
    for v in range(5):
        if res.optimal_first_moves >> v & 1:
            after = solve(GameState(g, g.closed[v], Player.STALLER))
            assert 1 + after.value == res.value
    done = solve(GameState(g, full_mask(5), Player.STALLER))
    assert done.value == 0 and done.optimal_first_moves == 0


def test_optimal_first_moves_complete_set():
    g = family_build("path", 4)
    res = solve(GameState(g, 0, Player.DOMINATOR))
    achieving = set()
    for v in range(4):
        if g.closed[v]:
            val = 1 + solve(GameState(g, g.closed[v], Player.STALLER)).value
            if val == res.value:
                achieving.add(v)
    assert res.optimal_first_moves == sum(1 << v for v in achieving)


def test_solver_equals_bruteforce_small_exhaustive():
    for n in range(1, 6):
        def visit(g):
            table_d, table_s = game_value_table(g)
            assert gamma_g(g) == brute_game_value(g, 0, 0) == table_d[0]
            assert gamma_g_prime(g) == brute_game_value(g, 0, 1) == table_s[0]

        enumerate_labeled_connected(n, visit)


def test_partial_values_match_bruteforce():
    for seed in range(10):
        g = random_graph(6, 1, 2, seed)
        table_d, table_s = game_value_table(g)
        for s in range(0, 1 << 6, 5):
            assert table_d[s] == brute_game_value(g, s, 0)
            assert table_s[s] == brute_game_value(g, s, 1)


def test_value_relabeling_invariant():
    from domgame._bits import splitmix64_below

    state = 99
    for seed in range(50):
        n = 5 + seed % 4
        g = random_graph(n, 1, 2, seed + 1000)
        base = gamma_g(g)
        for _ in range(10):
            perm = list(range(n))
            for i in range(n - 1, 0, -1):
                j, state = splitmix64_below(state, i + 1)
                perm[i], perm[j] = perm[j], perm[i]
            assert gamma_g(relabel(g, perm)) == base


def test_gamma_vs_twice_gamma_bound():
    for seed in range(60):
        g = random_graph(7, 1, 2, seed)
        from domgame import is_connected

        if not is_connected(g):
            continue
        assert gamma_g(g) <= 2 * domination_number(g) - 1


def test_domination_numbers():
    assert domination_number(family_build("complete", 7)) == 1
    assert domination_number(family_build("cycle", 4)) == 2
    assert domination_number(family_build("petersen")) == 3
    for seed in range(20):
        g = random_graph(7, 1, 2, seed)
        assert domination_number(g) == brute_domination_number(g)


def test_node_budget_guard():
    g = family_build("petersen")
    with pytest.raises(BudgetExceededError):
        solve(GameState(g, 0, Player.DOMINATOR), node_budget=10)


def test_prune_equals_exact_on_diam2():
    count = 0
    seed = 0
    while count < 40:
        g = random_graph(8, 1, 2, seed)
        seed += 1
        if not is_diam2(g):
            continue
        count += 1
        plain = solve(GameState(g, 0, Player.DOMINATOR))
        pruned = solve(GameState(g, 0, Player.DOMINATOR), prune=True)
        assert plain.value == pruned.value
        assert plain.optimal_first_moves == pruned.optimal_first_moves


def test_prune_rejected_off_diam2():
    from domgame import GraphError

    with pytest.raises(GraphError):
        solve(GameState(family_build("path", 4), 0, Player.DOMINATOR), prune=True)


def test_greedy_trace_k5():
    tr = greedy_trace(family_build("complete", 5))
    assert tr.move_count == 1
    assert tr.rounds == ((0, None),)


@pytest.mark.parametrize("policy", ["first-legal", "random", "maximize-u", "optimal"])
def test_greedy_trace_c5(policy):
    tr = greedy_trace(family_build("cycle", 5), policy, seed=11)
    # first greedy move dominates delta+1 = 3 vertices
    assert tr.rounds[0][0] == 2 == tr.n - tr.delta - 1


def test_greedy_trace_strictly_decreasing():
    for policy in ("first-legal", "random", "maximize-u", "optimal"):
        tr = greedy_trace(family_build("petersen"), policy, seed=3)
        flat = [u for pair in tr.rounds for u in pair if u is not None]
        assert all(a > b for a, b in zip(flat, flat[1:]))
        assert flat[-1] == 0


def test_greedy_trace_petersen_note():
    # a greedy Dominator game may finish in fewer moves than the game value
    tr = greedy_trace(family_build("petersen"), "optimal")
    assert tr.move_count >= 1
    assert tr.rounds[0][0] <= tr.n - tr.delta - 1


def test_verify_ui_bounds_examples():
    assert verify_ui_bounds(family_build("complete_bipartite", 1, 3)) is None
    assert verify_ui_bounds(family_build("cycle", 6)) is None
    # C6 attains u_1 = n - delta - 1 = 3: trace it
    tr = greedy_trace(family_build("cycle", 6))
    assert tr.rounds[0][0] == 3


def test_verify_ui_bounds_exhaustive_n5():
    def visit(g):
        assert verify_ui_bounds(g) is None

    for n in range(2, 6):
        enumerate_labeled_connected(n, visit)
