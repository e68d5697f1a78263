"""Backend selection for the oracle kernels.

The compiled extension is used when it imported cleanly, unless the
environment variable ``EDGEZETA_PURE`` is set to a non-empty value other
than ``0``. ``BACKEND`` names the active choice.
"""

from __future__ import annotations

import os
from array import array

from . import _kernels_py

_compiled = None
if os.environ.get("EDGEZETA_PURE", "") in ("", "0"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py
BACKEND = "compiled" if _compiled is not None else "python"

INT64_LIMIT = 2**62


def as_int64(values) -> array:
    return values if isinstance(values, array) and values.typecode == "q" else array("q", values)


def rref_mod_p(flat, rows: int, cols: int, p: int, impl=None):
    return (impl or _impl).rref_mod_p(as_int64(flat), rows, cols, p)


def rank_mod_p(flat, rows: int, cols: int, p: int, impl=None) -> int:
    return (impl or _impl).rank_mod_p(as_int64(flat), rows, cols, p)


def closed_walk_traces(indptr, indices, n: int, lmax: int, impl=None) -> list[int]:
    """``trace(A^L)`` for L = 1..lmax, exact.

    The compiled kernel works in int64; when the walk counts could overflow
    (n * maxdeg^lmax >= 2^62) the big-integer Python version is used instead.
    """
    impl = impl or _impl
    if n == 0 or lmax <= 0:
        return [0] * max(lmax, 0)
    maxdeg = max(indptr[u + 1] - indptr[u] for u in range(n))
    if impl is not _kernels_py and n * max(maxdeg, 1) ** lmax >= INT64_LIMIT:
        impl = _kernels_py
    return [int(x) for x in impl.closed_walk_traces(as_int64(indptr), as_int64(indices), n, lmax)]


def available_backends() -> dict:
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
