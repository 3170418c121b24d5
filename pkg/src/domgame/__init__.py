"""Exact domination-game solving and diameter-2 census tooling."""

from .backend import ACTIVE_BACKEND
from .errors import (
    BudgetExceededError,
    CheckpointError,
    DomgameError,
    Graph6Error,
    GraphError,
    RecordSchemaError,
)
from .graphs import (
    DIAM_DISCONNECTED,
    Graph,
    GraphMetrics,
    degree_stats,
    diameter,
    enumerate_labeled_connected,
    find_twins,
    from_edges,
    from_pair_mask,
    is_connected,
    is_diam2,
    is_hamiltonian,
    random_graph,
    relabel,
    to_pair_mask,
)
from .graph6 import encode_graph6, parse_graph6, read_graph6_stream
from .families import FAMILY_NAMES, family_build
from .canon import canonical_form, fingerprint
from .solver import (
    DEFAULT_NODE_BUDGET,
    GameState,
    GreedyTrace,
    Player,
    SolveResult,
    domination_number,
    game_value_table,
    gamma_g,
    gamma_g_partial,
    gamma_g_prime,
    greedy_trace,
    legal_moves,
    solve,
    verify_ui_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_BACKEND",
    "BudgetExceededError",
    "CheckpointError",
    "DEFAULT_NODE_BUDGET",
    "DIAM_DISCONNECTED",
    "DomgameError",
    "FAMILY_NAMES",
    "GameState",
    "Graph",
    "Graph6Error",
    "GraphError",
    "GraphMetrics",
    "GreedyTrace",
    "Player",
    "RecordSchemaError",
    "SolveResult",
    "canonical_form",
    "degree_stats",
    "diameter",
    "domination_number",
    "encode_graph6",
    "enumerate_labeled_connected",
    "family_build",
    "find_twins",
    "fingerprint",
    "from_edges",
    "from_pair_mask",
    "game_value_table",
    "gamma_g",
    "gamma_g_partial",
    "gamma_g_prime",
    "greedy_trace",
    "is_connected",
    "is_diam2",
    "is_hamiltonian",
    "legal_moves",
    "parse_graph6",
    "random_graph",
    "read_graph6_stream",
    "relabel",
    "solve",
    "to_pair_mask",
    "verify_ui_bounds",
]
