"""Hot loops of the package, in two interchangeable implementations.

``GALLAI_RAMSEY_BACKEND=numba`` (the default when numba imports) selects the
``@njit`` kernels in :mod:`._jit`; ``GALLAI_RAMSEY_BACKEND=numpy`` selects the
pure-numpy versions in :mod:`._numpy`.  Both return identical results and, for
the search kernel, identical node statistics.
"""

import os

from . import _numpy

try:
    from . import _jit
except ImportError:  # pragma: no cover - numba missing
    _jit = None

ENV_VAR = "GALLAI_RAMSEY_BACKEND"

# search kernel return codes
RUNNING = 0
FOUND = 1
EXHAUSTED = 2

# indices into the search statistics vector
STAT_NODES = 0
STAT_PRUNE_RAINBOW = 1
STAT_PRUNE_DOUBLE_STAR = 2
STAT_PRUNE_SYMMETRY = 3
STAT_LEAF_REJECT = 4
N_STATS = 5


def _select(name):
    if name is None:
        return _jit if _jit is not None else _numpy
    name = name.strip().lower()
    if name in ("", "numba", "jit"):
        return _jit if _jit is not None else _numpy
    if name in ("numpy", "python", "np"):
        return _numpy
    raise ValueError(f"{ENV_VAR} must be 'numba' or 'numpy', got {name!r}")


backend = _select(os.environ.get(ENV_VAR))
BACKEND_NAME = "numba" if backend is _jit else "numpy"


def get_backend(name=None):
    """Return a kernel module by name, or the active one when ``name`` is None."""
    if name is None:
        return backend
    return _select(name)
