"""Kernel backend selection.

The compiled ``_speedups`` extension is used when it imports; otherwise the
pure-Python twin. Setting ``EUCRHYTHM_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("EUCRHYTHM_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

chord_table = _impl.chord_table

if _impl is _kernels_py:
    geodesic_counts = _impl.geodesic_counts
    pair_sums = _impl.pair_sums
    deep_masks = _impl.deep_masks
    argmax_masks = _impl.argmax_masks
    euclidean_string_counts = _impl.euclidean_string_counts
else:
    # the compiled buffers are fixed-size; larger inputs take the slow path

    def geodesic_counts(onsets, n):
        impl = _impl if n <= _impl.MAX_N else _kernels_py
        return impl.geodesic_counts(onsets, n)

    def pair_sums(onsets, n):
        impl = _impl if n <= _impl.MAX_N else _kernels_py
        return impl.pair_sums(onsets, n)

    def deep_masks(n):
        impl = _impl if n <= _impl.MAX_DEEP_N else _kernels_py
        return impl.deep_masks(n)

    def argmax_masks(n, k, metric, tol=1e-9):
        impl = _impl if n <= _impl.MAX_N else _kernels_py
        return impl.argmax_masks(n, k, metric, tol)

    def euclidean_string_counts(length, max_entry):
        impl = _impl if length <= _impl.MAX_STRING_LENGTH else _kernels_py
        return impl.euclidean_string_counts(length, max_entry)


def backends():
    """Every importable backend module, keyed by name."""
    found = {"python": _kernels_py}
    try:
        from . import _speedups

        found["cython"] = _speedups
    except ImportError:
        pass
    return found
