"""Exact-arithmetic primitives and the domain types shared by every module.

All counts are plain Python ints (arbitrary precision, never floats), all
vertex labels are 1-based, and every value type validates its own invariants
on construction so that downstream code never sees a malformed object.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb

# A count is an exact nonnegative integer of unbounded size.
Count = int


class FormulaDomainError(ValueError):
    """A formula was asked for parameters outside its proven range."""


class EnumerationLimitError(ValueError):
    """An exhaustive enumeration was requested above the configured size cap."""


class InconsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


def binom(a: int, b: int) -> Count:
    """Binomial coefficient C(a, b), zero whenever b < 0 or b > a.

    The zero convention outside [0, a] is relied on throughout: the
    alternating reflection sums index binomials with arbitrarily shifted
    (possibly negative) lower arguments.
    """
    if a < 0:
        raise ValueError(f"binom: upper argument must be nonnegative, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class PathHom:
    """A homomorphism from an n-vertex path to a k-vertex path.

    Stored as the image sequence f(1), ..., f(n); consecutive images must
    differ by exactly 1 (adjacent vertices map to adjacent vertices).
    """

    n: int
    k: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError(f"path sizes must be positive, got n={self.n}, k={self.k}")
        if len(self.images) != self.n:
            raise ValueError(f"expected {self.n} images, got {len(self.images)}")
        for i, v in enumerate(self.images, start=1):
            if not 1 <= v <= self.k:
                raise ValueError(f"image f({i})={v} outside target path [1..{self.k}]")
        for i in range(self.n - 1):
            if abs(self.images[i + 1] - self.images[i]) != 1:
                raise ValueError(
                    f"f({i + 1})={self.images[i]} and f({i + 2})={self.images[i + 1]} "
                    "are not adjacent in the target path"
                )

    @classmethod
    def from_images(cls, images, k: int) -> "PathHom":
        images = tuple(images)
        return cls(len(images), k, images)

    def __call__(self, vertex: int) -> int:
        """Image of a source vertex (1-based)."""
        return self.images[vertex - 1]

    @property
    def image_set(self) -> frozenset[int]:
        return frozenset(self.images)

    def is_surjective(self) -> bool:
        return len(self.image_set) == self.k


_BLOCK_RE = re.compile(r"\{([0-9]+(?:\s*,\s*[0-9]+)*)\}")


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1..n} in canonical form.

    Canonical means: blocks ordered by their minima, elements inside each
    block ascending. Construct through :meth:`from_blocks` unless the input
    is already canonical; equality of canonical partitions is then plain
    structural equality.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("empty block in partition")
            if list(block) != sorted(block):
                raise ValueError(f"block {block} is not ascending")
            overlap = seen.intersection(block)
            if overlap:
                raise ValueError(f"elements {sorted(overlap)} appear in two blocks")
            seen.update(block)
        if seen != set(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition [1..{self.n}]")
        minima = [b[0] for b in self.blocks]
        if minima != sorted(minima):
            raise ValueError("blocks are not ordered by minima")

    @classmethod
    def from_blocks(cls, blocks, n: int | None = None) -> "SetPartition":
        """Canonicalize arbitrary block order / element order."""
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        if n is None:
            n = sum(len(b) for b in canon)
        return cls(n, canon)

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse the text form ``{1,3,5,9}{2,4,10}{6,8}{7}{11}``."""
        stripped = text.strip()
        if not stripped:
            raise ValueError("empty partition text")
        pos = 0
        blocks = []
        for m in _BLOCK_RE.finditer(stripped):
            if m.start() != pos:
                raise ValueError(f"unparseable partition text at offset {pos}: {text!r}")
            blocks.append(tuple(int(x) for x in m.group(1).split(",")))
            pos = m.end()
        if pos != len(stripped):
            raise ValueError(f"unparseable partition text at offset {pos}: {text!r}")
        return cls.from_blocks(blocks)

    def text_form(self) -> str:
        return "".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        """Map element -> 0-based index of its block."""
        out: dict[int, int] = {}
        for i, block in enumerate(self.blocks):
            for x in block:
                out[x] = i
        return out


@dataclass(frozen=True)
class Epispectrum:
    """Counts of endomorphism-induced partitions of an n-path, by block count.

    ``values`` has length n-1; the 1-based entry k counts induced partitions
    with n-k+1 blocks (retrieved via :meth:`entry`). Entries 1 and 2 are
    pinned to 1 and 2: only the all-singletons partition has n blocks, and
    exactly two induced partitions have n-1 blocks once n >= 3.
    """

    n: int
    values: tuple[Count, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"epispectrum needs n >= 2, got {self.n}")
        if len(self.values) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} entries, got {len(self.values)}")
        if any(v < 0 for v in self.values):
            raise ValueError("negative count in epispectrum")
        if self.values[0] != 1:
            raise ValueError(f"entry 1 must be 1, got {self.values[0]}")
        if self.n >= 3 and self.values[1] != 2:
            raise ValueError(f"entry 2 must be 2, got {self.values[1]}")

    def entry(self, k: int) -> Count:
        """Number of induced partitions with n-k+1 blocks (1 <= k <= n-1)."""
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"entry index {k} outside [1..{self.n - 1}]")
        return self.values[k - 1]

    def text_form(self) -> str:
        return ",".join(map(str, self.values))
