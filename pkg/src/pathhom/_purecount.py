"""Pure-Python counting kernels.

Reference implementations of the inner loops that dominate the runtime of
grid verification. `pathhom._fastcount` mirrors these signatures in C; the
dispatch in `pathhom.backend` picks whichever applies. Everything here uses
Python ints, so there is no size limit.
"""

from __future__ import annotations

from collections.abc import Iterator


def dp_start_counts(n: int, k: int) -> list[int]:
    """Vector of walk counts by start vertex.

    Entry j-1 is the number of n-vertex image sequences on a k-path whose
    first image is j: one transfer step per source edge, applied n-1 times
    to the all-ones vector.
    """
    v = [1] * k
    for _ in range(n - 1):
        w = [0] * k
        for j in range(k):
            acc = 0
            if j > 0:
                acc += v[j - 1]
            if j + 1 < k:
                acc += v[j + 1]
            w[j] = acc
        v = w
    return v


def image_sequences(n: int, k: int, start: int | None = None) -> Iterator[tuple[int, ...]]:
    """All valid image sequences in lexicographic order, as tuples.

    Each neighbor step explores v-1 before v+1, so the stream is sorted.
    """
    starts = range(1, k + 1) if start is None else (start,)
    seq = [0] * n
    for s in starts:
        seq[0] = s
        yield from _extend(seq, 1, n, k)


def _extend(seq: list[int], depth: int, n: int, k: int) -> Iterator[tuple[int, ...]]:
    if depth == n:
        yield tuple(seq)
        return
    v = seq[depth - 1]
    if v > 1:
        seq[depth] = v - 1
        yield from _extend(seq, depth + 1, n, k)
    if v < k:
        seq[depth] = v + 1
        yield from _extend(seq, depth + 1, n, k)


def count_surjective(n: int, k: int) -> int:
    """Number of image sequences covering every vertex of the k-path.

    Exhaustive walk over the same tree as `image_sequences`, filtering on
    full coverage via a bitmask instead of materializing tuples.
    """
    if k > n or k < 1:
        return 0
    full = (1 << k) - 1
    total = 0
    for s in range(1, k + 1):
        total += _count_surj(1, s, 1 << (s - 1), n, k, full)
    return total


def _count_surj(depth: int, v: int, seen: int, n: int, k: int, full: int) -> int:
    if depth == n:
        return 1 if seen == full else 0
    acc = 0
    if v > 1:
        w = v - 1
        acc += _count_surj(depth + 1, w, seen | (1 << (w - 1)), n, k, full)
    if v < k:
        w = v + 1
        acc += _count_surj(depth + 1, w, seen | (1 << (w - 1)), n, k, full)
    return acc


def kernel_census(n: int) -> set[bytes]:
    """Distinct kernel partitions over all endomorphisms of an n-path.

    Each partition is encoded as a restricted-growth string: byte d is the
    0-based block label of source vertex d+1, blocks labeled in order of
    first appearance. That encoding is canonical, so set membership
    deduplicates partitions exactly.
    """
    out: set[bytes] = set()
    label_of = [0] * (n + 2)  # 0 = unlabeled; labels stored 1-based
    rgs = bytearray(n)
    for s in range(1, n + 1):
        _census(1, s, 1, n, label_of, rgs, out)
    return out


def _census(depth: int, v: int, next_label: int, n: int,
            label_of: list[int], rgs: bytearray, out: set[bytes]) -> None:
    lbl = label_of[v]
    fresh = lbl == 0
    if fresh:
        lbl = next_label
        label_of[v] = lbl
        next_label += 1
    rgs[depth - 1] = lbl - 1
    if depth == n:
        out.add(bytes(rgs))
    else:
        if v > 1:
            _census(depth + 1, v - 1, next_label, n, label_of, rgs, out)
        if v < n:
            _census(depth + 1, v + 1, next_label, n, label_of, rgs, out)
    if fresh:
        label_of[v] = 0


def banded_dp(e: int, nn: int, t: int, s: int) -> int:
    """Paths of east/north unit steps from the origin to (e, nn) that keep
    x - s <= y <= x + t at every lattice point, counted cell by cell.
    """
    if not (e + t >= nn >= e - s):
        return 0
    prev = [0] * (nn + 1)
    for x in range(e + 1):
        cur = [0] * (nn + 1)
        ylo = max(0, x - s)
        yhi = min(nn, x + t)
        for y in range(ylo, yhi + 1):
            if x == 0 and y == 0:
                cur[y] = 1
                continue
            acc = prev[y]
            if y > 0:
                acc += cur[y - 1]
            cur[y] = acc
        prev = cur
    return prev[nn]
