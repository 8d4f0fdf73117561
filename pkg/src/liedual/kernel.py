"""Backend selection for the integer row-reduction kernel.

The compiled extension is preferred when it was built; set the environment
variable LIEDUAL_PURE_PYTHON=1 to force the pure-Python implementation (used
by the benchmark and by tests that compare the two backends).
"""

import os

if os.environ.get("LIEDUAL_PURE_PYTHON"):
    from liedual import _kernel_py as _impl

    BACKEND = "python"
else:
    try:
        from liedual import _kernel_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from liedual import _kernel_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

rref_int = _impl.rref_int
rank_int = _impl.rank_int
det_int = _impl.det_int
