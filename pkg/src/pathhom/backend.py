"""Kernel selection: compiled C kernels when present and exact, else pure Python.

The compiled module is optional. It computes in 64-bit integers, so each
kernel has a hard input bound below which every intermediate value provably
fits; the dispatchers here enforce those bounds and silently fall back to
the pure kernels outside them. Set ``PATHHOM_PURE=1`` in the environment to
ignore the compiled module entirely.
"""

from __future__ import annotations

import os

from . import _purecount

_fastcount = None
if os.environ.get("PATHHOM_PURE") != "1":
    try:
        from . import _fastcount  # type: ignore[no-redef]
    except ImportError:
        _fastcount = None

# Exactness bounds for the 64-bit kernels:
#   dp_start_counts: entries <= 2**(n-1), so n <= 64 fits unsigned 64-bit.
#   banded_dp:       cells <= C(e+nn, .), so e+nn <= 64 fits.
#   enumeration:     counts <= k * 2**(n-1); n <= 25 is far below overflow
#                    (the runtime, not the width, is the real limit there).
DP_FAST_MAX_N = 64
BAND_FAST_MAX_STEPS = 64
ENUM_FAST_MAX_N = 25

_BACKENDS = ("auto", "pure", "fast")


def has_fast() -> bool:
    return _fastcount is not None


def available_backends() -> tuple[str, ...]:
    return ("pure", "fast") if has_fast() else ("pure",)


def _pick(backend: str, within_bounds: bool):
    if backend not in _BACKENDS:
        raise ValueError(f"unknown backend {backend!r}, expected one of {_BACKENDS}")
    if backend == "pure":
        return _purecount
    if backend == "fast":
        if _fastcount is None:
            raise ValueError("compiled backend requested but pathhom._fastcount is not available")
        if not within_bounds:
            raise ValueError("compiled backend requested outside its exact-arithmetic bounds")
        return _fastcount
    return _fastcount if (_fastcount is not None and within_bounds) else _purecount


def dp_start_counts(n: int, k: int, backend: str = "auto") -> list[int]:
    return _pick(backend, n <= DP_FAST_MAX_N).dp_start_counts(n, k)


def count_surjective(n: int, k: int, backend: str = "auto") -> int:
    return _pick(backend, n <= ENUM_FAST_MAX_N).count_surjective(n, k)


def kernel_census(n: int, backend: str = "auto") -> set[bytes]:
    return _pick(backend, n <= ENUM_FAST_MAX_N - 1).kernel_census(n)


def banded_dp(e: int, nn: int, t: int, s: int, backend: str = "auto") -> int:
    return _pick(backend, e + nn <= BAND_FAST_MAX_STEPS).banded_dp(e, nn, t, s)
