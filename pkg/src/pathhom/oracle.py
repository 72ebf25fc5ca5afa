"""Ground-truth counters: transfer-step dynamic programming and exhaustive
enumeration. Every closed formula in the package is validated against these.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from . import _purecount, backend
from .core import Count, EnumerationLimitError, PathHom

DEFAULT_ENUM_LIMIT = 16


@dataclass(frozen=True)
class StartCountVector:
    """Homomorphism counts split by the image of the first source vertex.

    ``counts`` has length k; the 1-based entry j is the number of
    homomorphisms with f(1) = j, retrieved via indexing: ``vec[j]``.
    """

    k: int
    counts: tuple[Count, ...]

    def __post_init__(self):
        if len(self.counts) != self.k:
            raise ValueError(f"expected {self.k} entries, got {len(self.counts)}")

    def __getitem__(self, j: int) -> Count:
        if not 1 <= j <= self.k:
            raise IndexError(f"start vertex {j} outside [1..{self.k}]")
        return self.counts[j - 1]

    @property
    def total(self) -> Count:
        return sum(self.counts)


def hom_start_counts_dp(n: int, k: int, method: str = "auto") -> StartCountVector:
    """Exact start-split counts by iterating the adjacency transfer step
    n-1 times from the all-ones vector."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    return StartCountVector(k, tuple(backend.dp_start_counts(n, k, backend=method)))


def hom_count_dp(n: int, k: int, method: str = "auto") -> Count:
    """Total homomorphism count; 0 for the empty target, k for a single
    source vertex."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if k <= 0:
        return 0
    return sum(backend.dp_start_counts(n, k, backend=method))


def enumerate_homs(n: int, k: int, start: int | None = None) -> Iterator[PathHom]:
    """Yield every homomorphism (optionally with f(1) fixed) exactly once,
    in lexicographic order of image sequences."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if start is not None and not 1 <= start <= k:
        raise ValueError(f"start vertex {start} outside [1..{k}]")
    for images in _purecount.image_sequences(n, k, start):
        yield PathHom(n, k, images)


def hom_count_enum(n: int, k: int, limit: int = DEFAULT_ENUM_LIMIT) -> Count:
    """Total homomorphism count by walking the whole enumeration tree;
    the slowest route, kept as a second independent check on the DP."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if n > limit:
        raise EnumerationLimitError(
            f"hom_count_enum(n={n}) above enumeration limit {limit}"
        )
    return sum(1 for _ in _purecount.image_sequences(n, k))


def epi_count_brute(n: int, k: int, limit: int = DEFAULT_ENUM_LIMIT) -> Count:
    """Surjective homomorphism count by exhaustive enumeration.

    Walks the same tree as `enumerate_homs` and keeps the sequences whose
    image set is all of [1..k]. Guarded by ``limit`` because the tree has
    about k * 2**(n-1) leaves.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if n > limit:
        raise EnumerationLimitError(
            f"epi_count_brute(n={n}) above enumeration limit {limit}; "
            "raise the limit explicitly if the runtime is acceptable"
        )
    if k > n:
        return 0
    return backend.count_surjective(n, k)
