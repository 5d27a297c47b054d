"""Hot-loop kernels, compiled when available.

The Cython extension ``_ckernels`` is preferred; ``_pykernels`` is the
fallback and the reference.  Set ``FANOSTAB_PURE_PYTHON=1`` to force the
fallback.  ``FSK_THREADS`` caps the threads used by parallel kernels.
"""
from __future__ import annotations

import os
from types import ModuleType

from fanostab import _pykernels

_compiled: ModuleType | None
try:
    from fanostab import _ckernels as _compiled
except ImportError:
    _compiled = None

if _compiled is not None and os.environ.get("FANOSTAB_PURE_PYTHON") != "1":
    _impl: ModuleType = _compiled
    BACKEND = "cython"
else:
    _impl = _pykernels
    BACKEND = "python"


def available_backends() -> dict[str, ModuleType]:
    out = {"python": _pykernels}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def thread_count() -> int:
    raw = os.environ.get("FSK_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def c4_count(n, pairs) -> int:
    return _impl.c4_count(n, pairs, thread_count())


def octahedron_pair_total(n, edges) -> int:
    return _impl.octahedron_pair_total(n, edges, thread_count())


def find_fano(n, edges):
    return _impl.find_fano(n, edges)


def first_heavy_triple(M, vertices, bound):
    return _impl.first_heavy_triple(M, vertices, bound)


def first_heavy_quadruple(M, vertices, bound):
    return _impl.first_heavy_quadruple(M, vertices, bound)
