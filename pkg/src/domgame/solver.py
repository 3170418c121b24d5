"""Exact domination-game values, dominating sets, and greedy-play tools.

The game: players alternately pick vertices, every pick must dominate at
least one new vertex, and play stops once the picks form a dominating
set. Dominator minimizes the total number of moves, Staller maximizes.
The D-game value (Dominator first) from the empty position is the game
domination number; the S-game value is its Staller-start counterpart.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from ._bits import full_mask, popcount, splitmix64_below
from .backend import kernels
from .errors import BudgetExceededError, GraphError
from .graphs import Graph, is_connected, is_diam2

DEFAULT_NODE_BUDGET = 50_000_000

EXACT_MAX_N = 24  # dense state tables; 2^n states per player


class Player(IntEnum):
    DOMINATOR = 0
    STALLER = 1

    @property
    def other(self) -> "Player":
        return Player(1 - self.value)


@dataclass(frozen=True)
class GameState:
    """A partially dominated position: who moves next on graph|dominated.

    The value of a position depends only on (dominated, to_move); a
    vertex is legal iff its closed neighborhood is not fully dominated,
    so vertices that were already played are never legal again and the
    move history need not be part of the state.
    """

    graph: Graph
    dominated: int
    to_move: Player

    def is_over(self) -> bool:
        return self.dominated == full_mask(self.graph.n)


@dataclass(frozen=True)
class SolveResult:
    value: int
    nodes_visited: int
    optimal_first_moves: int


def legal_moves(state: GameState) -> int:
    """Mask of vertices that would dominate at least one new vertex."""
    g = state.graph
    mask = 0
    for v in range(g.n):
        if g.closed[v] & ~state.dominated:
            mask |= 1 << v
    return mask


def solve(
    state: GameState,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    prune: bool = False,
) -> SolveResult:
    """Exact minimax value of a position with full memoization.

    optimal_first_moves is the complete set of first moves achieving
    the value. prune enables a sound diameter-2 cut (admissible
    remaining-move bounds); it never changes results and is rejected
    for graphs that are not of diameter 2.
    """
    g = state.graph
    if prune and not is_diam2(g):
        raise GraphError("prune requires a diameter-2 graph")
    max_closed = max(popcount(c) for c in g.closed)
    value, nodes, moves, status = kernels.solve_game(
        g.closed_array(),
        g.n,
        state.dominated,
        int(state.to_move),
        node_budget,
        prune,
        max_closed,
    )
    if status:
        raise BudgetExceededError(
            f"solve exceeded the node budget of {node_budget} states"
        )
    return SolveResult(value=value, nodes_visited=nodes, optimal_first_moves=moves)


def gamma_g(g: Graph, **kw) -> int:
    """Game domination number (D-game from the empty position)."""
    return solve(GameState(g, 0, Player.DOMINATOR), **kw).value


def gamma_g_prime(g: Graph, **kw) -> int:
    """S-game value from the empty position."""
    return solve(GameState(g, 0, Player.STALLER), **kw).value


def gamma_g_partial(g: Graph, dominated: int, to_move: Player, **kw) -> int:
    """Value of the partially dominated position graph|dominated."""
    return solve(GameState(g, dominated, to_move), **kw).value


def game_value_table(g: Graph):
    """Exact values of every position, as (dominator_vals, staller_vals).

    Arrays are indexed by the dominated-set mask. Useful for sweeping
    all partial positions of one graph at once; cost is Theta(2^n * n).
    """
    if g.n > EXACT_MAX_N:
        raise BudgetExceededError(f"state table needs n <= {EXACT_MAX_N}")
    return kernels.solve_all(g.closed_array(), g.n)


def domination_number(g: Graph) -> int:
    """Minimum size of a dominating set (exact, n <= 24)."""
    if g.n > EXACT_MAX_N:
        raise BudgetExceededError(f"exact dominating set needs n <= {EXACT_MAX_N}")
    return kernels.domination_number(g.closed_array(), g.n)


STALLER_POLICIES = ("first-legal", "random", "maximize-u", "optimal")


@dataclass(frozen=True)
class GreedyTrace:
    """Record of one simulated D-game with a greedy Dominator.

    rounds[i] = (u_{i+1}, u'_{i+1}): undominated counts after the
    (i+1)-th Dominator and Staller moves; the Staller entry is None
    when the game ended on Dominator's move.
    """

    n: int
    delta: int
    moves: tuple[int, ...]
    rounds: tuple[tuple[int, int | None], ...]

    @property
    def move_count(self) -> int:
        return len(self.moves)


def greedy_trace(g: Graph, staller_policy: str = "first-legal", seed: int = 0) -> GreedyTrace:
    """Play one full D-game: greedy Dominator versus a policy Staller.

    Dominator always dominates the most new vertices (ties: lowest
    vertex index). Staller policy is one of first-legal, random,
    maximize-u (leaves the most undominated after one ply), or optimal
    (exact game-value maximizing).
    """
    if staller_policy not in STALLER_POLICIES:
        raise ValueError(f"unknown staller policy {staller_policy!r}")
    if not is_connected(g):
        raise GraphError("greedy trace needs a connected graph")
    n = g.n
    full = full_mask(n)
    delta = min(popcount(a) for a in g.adj)
    state = seed & ((1 << 64) - 1)
    dominated = 0
    moves: list[int] = []
    rounds: list[tuple[int, int | None]] = []
    while dominated != full:
        # Dominator: maximize newly dominated, lowest index on ties.
        best_v = -1
        best_gain = 0
        for v in range(n):
            gain = popcount(g.closed[v] & ~dominated)
            if gain > best_gain:
                best_gain = gain
                best_v = v
        dominated |= g.closed[best_v]
        moves.append(best_v)
        u_i = n - popcount(dominated)
        if dominated == full:
            rounds.append((u_i, None))
            break
        legal = [v for v in range(n) if g.closed[v] & ~dominated]
        if staller_policy == "first-legal":
            w = legal[0]
        elif staller_policy == "random":
            idx, state = splitmix64_below(state, len(legal))
            w = legal[idx]
        elif staller_policy == "maximize-u":
            w = min(legal, key=lambda v: (popcount(g.closed[v] & ~dominated), v))
        else:  # optimal
            def staller_value(v: int) -> int:
                after = dominated | g.closed[v]
                if after == full:
                    return 1
                return 1 + solve(GameState(g, after, Player.DOMINATOR)).value

            w = max(legal, key=lambda v: (staller_value(v), -v))
        dominated |= g.closed[w]
        moves.append(w)
        rounds.append((u_i, n - popcount(dominated)))
    return GreedyTrace(n=n, delta=delta, moves=tuple(moves), rounds=tuple(rounds))


@dataclass(frozen=True)
class UiBoundsViolation:
    bound: str
    moves: tuple[int, ...]
    detail: str


UI_VERIFY_MAX_N = 8


def verify_ui_bounds(g: Graph) -> UiBoundsViolation | None:
    """Exhaustively check the greedy undominated-count bounds.

    Explores every Staller reply and every tie among greedy-maximal
    Dominator moves; at each node verifies, in integer arithmetic:
    u_1 <= n - delta - 1; u'_i <= u_i - 1; the recurrence
    u_{i+1} * (n - 2i) <= u'_i * (n - 2i - delta - 1); and the
    feasibility condition delta + 1 <= n - 2i whenever undominated
    vertices remain after Staller's i-th move. Returns the first
    violating play sequence, or None.
    """
    if g.n > UI_VERIFY_MAX_N:
        raise GraphError(f"exhaustive verification limited to n <= {UI_VERIFY_MAX_N}")
    if not is_connected(g):
        raise GraphError("verification needs a connected graph")
    n = g.n
    full = full_mask(n)
    delta = min(popcount(a) for a in g.adj)
    # a position repeats as (dominated set, round): the undominated count
    # it is checked against is determined by the set, so a revisited
    # position has an identical subtree and can be skipped
    seen: set[tuple[int, int]] = set()

    def explore(dominated: int, i: int, prev_u_prime: int, moves: list[int]) -> UiBoundsViolation | None:
        # Dominator's i-th move: branch over all greedy-maximal choices.
        gains = [(popcount(g.closed[v] & ~dominated), v) for v in range(n)]
        max_gain = max(gain for gain, _ in gains)
        for gain, v in gains:
            if gain != max_gain:
                continue
            after_d = dominated | g.closed[v]
            u_i = n - popcount(after_d)
            moves.append(v)
            if i == 1:
                if u_i > n - delta - 1:
                    return UiBoundsViolation(
                        "u1", tuple(moves), f"u_1={u_i} > n-delta-1={n - delta - 1}"
                    )
            else:
                lhs = u_i * (n - 2 * (i - 1))
                rhs = prev_u_prime * (n - 2 * (i - 1) - delta - 1)
                if lhs > rhs:
                    return UiBoundsViolation(
                        "recurrence",
                        tuple(moves),
                        f"u_{i}*(n-2i)={lhs} > u'_{i - 1}*(n-2i-delta-1)={rhs}",
                    )
            if after_d != full:
                # Staller's i-th move: branch over every legal reply.
                for w in range(n):
                    if not g.closed[w] & ~after_d:
                        continue
                    after_s = after_d | g.closed[w]
                    u_prime = n - popcount(after_s)
                    moves.append(w)
                    if u_prime > u_i - 1:
                        return UiBoundsViolation(
                            "staller-progress",
                            tuple(moves),
                            f"u'_{i}={u_prime} > u_{i}-1={u_i - 1}",
                        )
                    if after_s != full:
                        if delta + 1 > n - 2 * i:
                            return UiBoundsViolation(
                                "feasibility",
                                tuple(moves),
                                f"delta+1={delta + 1} > n-2i={n - 2 * i} with u'_{i}={u_prime}",
                            )
                        if (after_s, i + 1) not in seen:
                            seen.add((after_s, i + 1))
                            found = explore(after_s, i + 1, u_prime, moves)
                            if found is not None:
                                return found
                    moves.pop()
            moves.pop()
        return None

    return explore(0, 1, -1, [])
