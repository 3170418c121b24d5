"""Kernel backend selection.

DOMGAME_BACKEND picks the implementation of the hot kernels:

  auto    (default) numba when importable, else the pure-Python path
  numba   require the jitted kernels, fail loudly if numba is missing
  python  force the pure-Python reference kernels

Both backends expose the same functions with identical results; see
benchmarks/bench_backends.py for a speed comparison.
"""

from __future__ import annotations

import os

_ENV_VAR = "DOMGAME_BACKEND"


def _select() -> str:
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
    if choice not in ("auto", "numba", "python"):
        raise RuntimeError(
            f"{_ENV_VAR}={choice!r} not understood; use auto, numba or python"
        )
    if choice == "python":
        return "python"
    try:
        import numba  # noqa: F401
    except ImportError:
        if choice == "numba":
            raise RuntimeError(f"{_ENV_VAR}=numba but numba is not installed")
        return "python"
    return "numba"


ACTIVE_BACKEND = _select()

if ACTIVE_BACKEND == "numba":
    from . import _kernels_numba as kernels
else:
    from . import _kernels_py as kernels  # type: ignore[no-redef]
