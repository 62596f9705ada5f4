"""Backend selection for the row-reduction kernel.

The compiled extension is used when it was built; otherwise the pure-Python
twin takes over.  Set ``POSTLIE_PURE_PYTHON=1`` to force the fallback (the
benchmark does this to compare both).
"""

import os

if os.environ.get("POSTLIE_PURE_PYTHON"):
    from ._rowreduce_py import BACKEND, reduce_int_rows
else:
    try:
        from ._rowreduce import BACKEND, reduce_int_rows
    except ImportError:
        from ._rowreduce_py import BACKEND, reduce_int_rows

__all__ = ["BACKEND", "reduce_int_rows"]
