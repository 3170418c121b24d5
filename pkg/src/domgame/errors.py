"""Exception types shared across the package."""


class DomgameError(Exception):
    """Base class for all package-specific errors."""


class GraphError(DomgameError, ValueError):
    """Invalid graph construction input (order, endpoint, loop)."""


class Graph6Error(DomgameError, ValueError):
    """Malformed graph6 data (bad byte, truncation, nonzero padding)."""


class BudgetExceededError(DomgameError, RuntimeError):
    """A solver hit its node budget; no value was produced."""


class RecordSchemaError(DomgameError, ValueError):
    """A census record line does not match the expected schema."""


class CheckpointError(DomgameError, RuntimeError):
    """Checkpoint does not match the job it is resumed against."""
