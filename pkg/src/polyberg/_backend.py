"""Backend selection: compiled extension when available, pure Python otherwise.

Set POLYBERG_BACKEND=pure (or =compiled) to force a choice; `compiled` raises
if the extension is missing instead of silently falling back.
"""

from __future__ import annotations

import os

_requested = os.environ.get("POLYBERG_BACKEND", "").strip().lower()

if _requested in ("", "compiled"):
    try:
        from . import _series_cy as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _series_py as _impl

        BACKEND = "pure"
elif _requested in ("pure", "python"):
    from . import _series_py as _impl

    BACKEND = "pure"
else:
    raise ImportError(
        f"POLYBERG_BACKEND={_requested!r} not recognized; use 'pure' or 'compiled'"
    )

powser_neg = _impl.powser_neg
deriv_series = _impl.deriv_series
ligocka_series = _impl.ligocka_series
grid_modulus = _impl.grid_modulus


def backend_name() -> str:
    """Name of the active backend: 'compiled' or 'pure'."""
    return BACKEND
