"""Backend selection for the GF(p)[i] elimination kernel.

The compiled extension is preferred when importable; the numpy fallback
implements the identical contract.  Set ``MULTIRANK_PURE=1`` to force
the fallback (used by the benchmark and the agreement tests).  Both
kernels consume their array arguments.
"""

from __future__ import annotations

import os

from . import _modrank_py

pure_rank_mod_gaussian = _modrank_py.rank_mod_gaussian

if os.environ.get("MULTIRANK_PURE"):
    compiled_rank_mod_gaussian = None
else:
    try:
        from . import _modrank_c

        compiled_rank_mod_gaussian = _modrank_c.rank_mod_gaussian
    except ImportError:
        compiled_rank_mod_gaussian = None

if compiled_rank_mod_gaussian is not None:
    rank_mod_gaussian = compiled_rank_mod_gaussian
    BACKEND = "compiled"
else:
    rank_mod_gaussian = pure_rank_mod_gaussian
    BACKEND = "python"
