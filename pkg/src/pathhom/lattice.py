"""Banded lattice-path counting and the walk encoding of start-pinned
homomorphisms.

A homomorphism with f(1) = 1 is the same thing as a word over {E, N} whose
prefixes keep the east-surplus x - y inside [0, k-1]: an east step raises
the current image, a north step lowers it. Words use the text alphabet
'E'/'N' throughout (that is also the CLI wire format).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backend
from .core import Count, EnumerationLimitError, PathHom, binom

EAST = "E"
NORTH = "N"

DEFAULT_BAND_BRUTE_LIMIT = 30


@dataclass(frozen=True)
class BandSpec:
    """The diagonal band x - s <= y <= x + t (both lines may be touched)."""

    t: int
    s: int

    def __post_init__(self):
        if self.t < 0 or self.s < 0:
            raise ValueError(f"band offsets must be nonnegative, got t={self.t}, s={self.s}")

    def admits(self, e: int, nn: int) -> bool:
        """Whether the endpoint (e, nn) lies inside the band at all."""
        return e + self.t >= nn >= e - self.s


def lattice_count_free(e: int, nn: int) -> Count:
    """Unconstrained east/north paths from the origin to (e, nn)."""
    if e < 0 or nn < 0:
        raise ValueError(f"endpoint must be in the first quadrant, got ({e}, {nn})")
    return binom(e + nn, e)


def lattice_count_banded(e: int, nn: int, band: BandSpec) -> Count:
    """Banded path count by the alternating reflection sum.

    Pairs of reflections about the two barrier lines shift the endpoint by
    multiples of t+s+2, giving a two-term window sum; endpoints outside the
    band count as zero up front (the sum is only meaningful inside).
    """
    if e < 0 or nn < 0:
        raise ValueError(f"endpoint must be in the first quadrant, got ({e}, {nn})")
    if not band.admits(e, nn):
        return 0
    steps = e + nn
    period = band.t + band.s + 2
    total = 0
    for a in (e, e + band.t + 1):
        sign = 1 if a == e else -1
        jlo = -((steps - a) // period)
        jhi = a // period
        for j in range(jlo, jhi + 1):
            total += sign * binom(steps, a - j * period)
    return total


def lattice_count_banded_brute(e: int, nn: int, band: BandSpec,
                               limit: int = DEFAULT_BAND_BRUTE_LIMIT) -> Count:
    """Banded path count by cell-by-cell grid DP; ground truth for the
    reflection sum, guarded by a total-steps limit."""
    if e < 0 or nn < 0:
        raise ValueError(f"endpoint must be in the first quadrant, got ({e}, {nn})")
    if e + nn > limit:
        raise EnumerationLimitError(
            f"banded brute count for {e + nn} steps above limit {limit}"
        )
    return backend.banded_dp(e, nn, band.t, band.s)


def hom1_via_lattice(n: int, k: int) -> Count:
    """Count of homomorphisms with f(1) = 1, summed over the possible word
    endpoints along the anti-diagonal e + y = n - 1."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    upper = min((n + k) // 2, n)
    band = BandSpec(t=0, s=k - 1)
    lo = -((1 - n) // 2)  # ceil((n-1)/2)
    return sum(lattice_count_banded(e, n - 1 - e, band) for e in range(lo, upper))


def encode_hom(f: PathHom) -> str:
    """Word of the image sequence: step i is E when f(i+1) = f(i) + 1,
    N when it drops. Only defined for f(1) = 1."""
    if f.images[0] != 1:
        raise ValueError(f"encoding requires f(1) = 1, got f(1) = {f.images[0]}")
    return "".join(
        EAST if b > a else NORTH for a, b in zip(f.images, f.images[1:])
    )


def word_endpoint(word: str) -> tuple[int, int]:
    """(#E, #N) of a word; validates the alphabet."""
    e = nn = 0
    for i, c in enumerate(word):
        if c == EAST:
            e += 1
        elif c == NORTH:
            nn += 1
        else:
            raise ValueError(f"invalid step {c!r} at position {i}; expected 'E' or 'N'")
    return e, nn


def decode_word(word: str, k: int) -> PathHom:
    """The unique homomorphism with f(1) = 1 whose encoding is ``word``.

    Every prefix must keep the east surplus inside [0, k-1]; the first
    offending prefix is reported otherwise.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    images = [1]
    v = 1
    for i, c in enumerate(word):
        if c == EAST:
            v += 1
        elif c == NORTH:
            v -= 1
        else:
            raise ValueError(f"invalid step {c!r} at position {i}; expected 'E' or 'N'")
        if not 1 <= v <= k:
            raise ValueError(
                f"prefix {word[: i + 1]!r} leaves the band 0 <= #E - #N <= {k - 1}"
            )
        images.append(v)
    return PathHom(len(images), k, tuple(images))
