"""Kernel backend selection.

Imports the compiled ``_kernels`` extension when available, otherwise
falls back to the pure-Python twin.  ``SPHEREBOUNDS_PURE=1`` in the
environment forces the fallback (useful for debugging and for the
backend benchmark).
"""

import os

if os.environ.get("SPHEREBOUNDS_PURE"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]


def backend() -> str:
    """Name of the active kernel backend: "compiled" or "python"."""
    return kernels.BACKEND
