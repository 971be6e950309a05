"""Select the compiled kernel backend, falling back to pure Python.

Set CURVED_MAXWELL_PURE=1 to force the fallback (used by the benchmark and
for debugging); otherwise the compiled extension is used when the build
produced one.
"""

from __future__ import annotations

import os

if os.environ.get("CURVED_MAXWELL_PURE"):
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

KERNELS_COMPILED: bool = bool(getattr(kernels, "COMPILED", False))

__all__ = ["kernels", "KERNELS_COMPILED"]
