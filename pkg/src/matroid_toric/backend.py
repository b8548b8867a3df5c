"""Selects the compiled reducer when it is importable.

Set ``MATROID_TORIC_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _reducer

if os.environ.get("MATROID_TORIC_PURE_PYTHON") == "1":
    Reducer = _reducer.Reducer
    NAME = "python"
else:
    try:
        from ._kernels import Reducer
        NAME = "cython"
    except ImportError:
        Reducer = _reducer.Reducer
        NAME = "python"

PurePythonReducer = _reducer.Reducer

__all__ = ["Reducer", "PurePythonReducer", "NAME"]
