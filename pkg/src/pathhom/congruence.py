"""Congruence classes of path endomorphisms.

An endomorphism induces the partition of the source vertices by equal
images (its kernel). This module enumerates those partitions exhaustively,
computes their counts by formula, and reconstructs from a bare partition
the (exactly two, mirror-image) surjections that induce it.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from . import backend
from .core import Count, EnumerationLimitError, Epispectrum, PathHom, SetPartition
from .closedform import lk_via_hom

DEFAULT_CENSUS_LIMIT = 14


def kernel_partition(f: PathHom) -> SetPartition:
    """Partition of the source vertices by equal image values."""
    blocks: dict[int, list[int]] = {}
    for x, v in enumerate(f.images, start=1):
        blocks.setdefault(v, []).append(x)
    return SetPartition.from_blocks(blocks.values(), n=f.n)


def rgs_to_partition(rgs: bytes) -> SetPartition:
    """Decode a restricted-growth string (byte i = 0-based block label of
    element i+1, labels in first-appearance order) into a partition."""
    blocks: list[list[int]] = []
    for x, lbl in enumerate(rgs, start=1):
        if lbl == len(blocks):
            blocks.append([])
        blocks[lbl].append(x)
    return SetPartition(len(rgs), tuple(tuple(b) for b in blocks))


def iter_set_partitions(n: int) -> Iterator[SetPartition]:
    """Every partition of [1..n], in restricted-growth-string order."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    rgs = bytearray(n)

    def rec(i: int, mx: int) -> Iterator[SetPartition]:
        if i == n:
            yield rgs_to_partition(bytes(rgs))
            return
        for v in range(mx + 2):
            rgs[i] = v
            yield from rec(i + 1, max(mx, v))

    yield from rec(1, 0)


def induced_partition_census(n: int, limit: int = DEFAULT_CENSUS_LIMIT) -> frozenset[SetPartition]:
    """All distinct kernel partitions over the endomorphisms of an n-path,
    by exhaustive enumeration."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if n > limit:
        raise EnumerationLimitError(f"kernel census for n={n} above limit {limit}")
    return frozenset(rgs_to_partition(r) for r in backend.kernel_census(n))


def epispectrum_brute(n: int, limit: int = DEFAULT_CENSUS_LIMIT) -> Epispectrum:
    """Epispectrum by enumerating every endomorphism and bucketing the
    distinct kernel partitions by block count."""
    if n < 2:
        raise ValueError(f"epispectrum needs n >= 2, got {n}")
    if n > limit:
        raise EnumerationLimitError(f"endomorphism enumeration for n={n} above limit {limit}")
    by_blocks: dict[int, int] = {}
    for rgs in backend.kernel_census(n):
        b = max(rgs) + 1
        by_blocks[b] = by_blocks.get(b, 0) + 1
    values = tuple(by_blocks.get(n - k + 1, 0) for k in range(1, n))
    return Epispectrum(n, values)


def epispectrum_formula(n: int) -> Epispectrum:
    """Epispectrum with every entry computed as half the corresponding
    surjection count; no enumeration, valid for any n >= 2."""
    if n < 2:
        raise ValueError(f"epispectrum needs n >= 2, got {n}")
    return Epispectrum(n, tuple(lk_via_hom(n, k) for k in range(1, n)))


@dataclass(frozen=True)
class ArrangementResult:
    """Outcome of reconstructing surjections from a candidate partition.

    For a partition actually induced by some endomorphism there are exactly
    two block orderings (each the reverse of the other); ``orderings`` hold
    them as 1-based indices into the canonical blocks, and ``witnesses``
    the surjections they define (block position = image value). Anything
    else yields ``valid = False`` with empty tuples.
    """

    valid: bool
    orderings: tuple[tuple[int, ...], ...]
    witnesses: tuple[PathHom, ...]

    @staticmethod
    def invalid() -> "ArrangementResult":
        return ArrangementResult(False, (), ())


def arrangements(p: SetPartition) -> ArrangementResult:
    """Reconstruct the two mirror-image surjections inducing ``p``, if any.

    Greedy two-ended build: blocks (sorted by minima) are placed one at a
    time; each new block must land next to the block holding min-1 of it,
    which forces every step after the initial left/right choice. A final
    full adjacency validation rejects partitions the greedy happens to
    order but that no homomorphism induces.
    """
    for block in p.blocks:
        for a, b in zip(block, block[1:]):
            if b == a + 1:
                return ArrangementResult.invalid()  # adjacent vertices can't share an image
    r = p.block_count
    if r == 1:
        # only possible for n = 1; the empty reversal pairs it with itself
        orderings = ((1,), (1,))
    else:
        block_of = p.block_of()
        built: list[list[int]] = []
        for seed in ((0, 1), (1, 0)):
            word = list(seed)
            ok = True
            for nxt in range(2, r):
                anchor = block_of[min(p.blocks[nxt]) - 1]
                if word[0] == anchor:
                    word.insert(0, nxt)
                elif word[-1] == anchor:
                    word.append(nxt)
                else:
                    ok = False
                    break
            if not ok:
                return ArrangementResult.invalid()
            built.append(word)
        orderings = tuple(tuple(i + 1 for i in word) for word in built)
    witnesses = []
    for ordering in orderings:
        position = {blk - 1: pos for pos, blk in enumerate(ordering, start=1)}
        block_of = p.block_of()
        images = tuple(position[block_of[x]] for x in range(1, p.n + 1))
        try:
            witnesses.append(PathHom(p.n, r, images))
        except ValueError:
            return ArrangementResult.invalid()
    return ArrangementResult(True, orderings, tuple(witnesses))
