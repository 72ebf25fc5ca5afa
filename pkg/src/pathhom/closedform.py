"""Closed-form counts, evaluated exactly.

Each formula here is an explicit alternating binomial sum (or a direct
expression) for a quantity the oracles also compute by DP or enumeration;
the test suite pins the two routes against each other. The doubly infinite
index sums are truncated to the window where a binomial argument can lie in
[0, upper] -- outside it every term is zero by the binom() convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import Count, FormulaDomainError, InconsistencyError, binom


def _window_sum(upper: int, a: int, period: int) -> Count:
    """Sum of binom(upper, a - j*period) over every integer j.

    Only arguments inside [0, upper] contribute, which pins j to the finite
    range [ceil((a - upper)/period), floor(a/period)].
    """
    jlo = -((upper - a) // period)
    jhi = a // period
    return sum(binom(upper, a - j * period) for j in range(jlo, jhi + 1))


def hom_count_closed(n: int, k: int) -> Count:
    """Homomorphism count from an n-path to a k-path.

    k * 2**(n-1) free walks, minus one reflection-correction layer per prefix
    length i; the layer at i is weighted 2**(n-1-i) and its inner sum has
    period k+1.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    total = k * 2 ** (n - 1)
    period = k + 1
    correction = 0
    for i in range(n - 1):
        inner = _window_sum(i, (i + 1) // 2, period) - _window_sum(i, (i + k + 1) // 2, period)
        correction += 2 ** (n - 1 - i) * inner
    return total - correction


def hom1_count_closed(n: int, k: int) -> Count:
    """Count of homomorphisms with f(1) = 1, as a single two-term
    reflection sum of period k+1 over the n-1 steps."""
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    period = k + 1
    return (_window_sum(n - 1, n // 2, period)
            - _window_sum(n - 1, (n + k) // 2, period))


def hom_j_count_closed(n: int, k: int, j: int) -> Count:
    """Count of homomorphisms with f(1) = j, split by the parity of n - j.

    Reached by summing, over the end vertices of matching parity, the
    two-barrier walk counts from j; the barrier reflections collapse to a
    +/- pair of period-(k+1) window sums per end vertex. The parity of
    n - j decides both which ends can be hit and the argument offsets.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if not 1 <= j <= k:
        raise ValueError(f"start vertex {j} outside [1..{k}]")
    period = k + 1
    if (n - j) % 2:
        ends = k // 2          # reachable ends are the even target vertices
    else:
        ends = (k + 1) // 2    # reachable ends are the odd target vertices
    base_direct = -((j - n) // 2)     # ceil((n-j)/2)
    base_reflect = -((-j - n) // 2)   # ceil((n+j)/2)
    total = 0
    for u in range(ends):
        total += (_window_sum(n - 1, base_direct + u, period)
                  - _window_sum(n - 1, base_reflect + u, period))
    return total


def end_count_closed(n: int) -> Count:
    """Endomorphism count of an n-path: (n+1)*2**(n-1) minus a central
    binomial correction that depends on the parity of n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if n % 2:
        return (n + 1) * 2 ** (n - 1) - (2 * n - 1) * binom(n - 1, (n - 1) // 2)
    return (n + 1) * 2 ** (n - 1) - n * binom(n, n // 2)


def epi_count_ie(n: int, k: int,
                 hom_count: Callable[[int, int], Count] = hom_count_closed) -> Count:
    """Surjective homomorphism count by inclusion-exclusion over the two
    maximal proper subpaths of the target: Hom(n,k) - 2*Hom(n,k-1) +
    Hom(n,k-2), where targets of size <= 0 contribute 0.

    ``hom_count`` may be swapped for the DP oracle; both must agree.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")

    def hom_or_zero(kk: int) -> Count:
        return hom_count(n, kk) if kk >= 1 else 0

    return hom_or_zero(k) - 2 * hom_or_zero(k - 1) + hom_or_zero(k - 2)


def lk_via_hom(n: int, k: int,
               hom_count: Callable[[int, int], Count] = hom_count_closed) -> Count:
    """Epispectrum entry k for an n-path: half the count of surjections onto
    the (n-k+1)-path. Valid for every 1 <= k <= n-1; asserts the surjection
    count is even before halving."""
    if n < 2:
        raise ValueError(f"need n >= 2, got n={n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"entry index {k} outside [1..{n - 1}]")
    epis = epi_count_ie(n, n - k + 1, hom_count)
    if epis % 2:
        raise InconsistencyError(
            f"surjection count {epis} for (n={n}, k={k}) is odd; "
            "the two mirror-image witnesses per induced partition should make it even"
        )
    return epis // 2


def _lk_pair(n: int, k: int) -> Count:
    """The binomial pair C(n-1, ceil(k/2)-1) + C(n-1, floor(k/2)-1),
    evaluated without the validity-threshold guard."""
    return binom(n - 1, -(k // -2) - 1) + binom(n - 1, k // 2 - 1)


def _require_threshold(n: int, k: int) -> None:
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    if n < 2 * k:
        raise FormulaDomainError(
            f"polynomial closed form is proven only for n >= 2k; got n={n}, k={k} "
            "(use lk_via_hom below the threshold)"
        )


def lk_closed(n: int, k: int) -> Count:
    """Epispectrum entry k in polynomial closed form; only valid once
    n >= 2k, and refuses smaller n rather than extrapolating."""
    _require_threshold(n, k)
    return _lk_pair(n, k)


@dataclass(frozen=True)
class LkTermBreakdown:
    """The fully materialized term structure behind the closed form of an
    epispectrum entry.

    ``terms_a`` / ``terms_b`` / ``terms_c`` hold the nonzero signed
    difference-pair contributions per (prefix length i, window index j);
    they come from the three-term surjection inclusion-exclusion with
    periods n-k+2, n-k+1, n-k. ``d_values`` is the telescoping sequence
    D_0..D_{n-1} whose increments reproduce the per-i layers, so
    ``total`` = D_{n-1}.
    """

    n: int
    k: int
    terms_a: dict[tuple[int, int], int]
    terms_b: dict[tuple[int, int], int]
    terms_c: dict[tuple[int, int], int]
    d_values: tuple[Count, ...]
    total: Count


def _fill_terms(store: dict[tuple[int, int], int], i: int,
                plus_arg: int, minus_arg: int, period: int) -> int:
    """Record nonzero binom(i, plus) - binom(i, minus) pairs over the j
    window; return their sum."""
    jlo = min(-((i - plus_arg) // period), -((i - minus_arg) // period))
    jhi = max(plus_arg // period, minus_arg // period)
    acc = 0
    for j in range(jlo, jhi + 1):
        val = binom(i, plus_arg - j * period) - binom(i, minus_arg - j * period)
        if val:
            store[(i, j)] = val
            acc += val
    return acc


def lk_telescope(n: int, k: int) -> LkTermBreakdown:
    """Evaluate the epispectrum entry the long way, keeping every term.

    Materializes the three per-(i, j) grids and the D_i sequence, and checks
    that the layered total telescopes to D_{n-1}. Same n >= 2k domain as
    `lk_closed`.
    """
    _require_threshold(n, k)
    pa, pb, pc = n - k + 2, n - k + 1, n - k
    terms_a: dict[tuple[int, int], int] = {}
    terms_b: dict[tuple[int, int], int] = {}
    terms_c: dict[tuple[int, int], int] = {}
    total = 0
    for i in range(n - 1):
        plus = (i + 1) // 2
        a_sum = _fill_terms(terms_a, i, plus, (i + n - k) // 2 + 1, pa)
        b_sum = _fill_terms(terms_b, i, plus, (i + n - k - 1) // 2 + 1, pb)
        c_sum = _fill_terms(terms_c, i, plus, (i + n - k - 2) // 2 + 1, pc)
        total += 2 ** (n - i - 2) * (-a_sum + 2 * b_sum - c_sum)
    d_values = []
    for i in range(n):
        base = (i + n - k - 1) // 2
        d_values.append(2 ** (n - i - 1) * (binom(i, base + 1) + binom(i, base - n + k)))
    if total != d_values[-1]:
        raise InconsistencyError(
            f"telescoped total {total} != D_{n - 1} = {d_values[-1]} for (n={n}, k={k})"
        )
    return LkTermBreakdown(n, k, terms_a, terms_b, terms_c, tuple(d_values), total)


def check_binomial_identities(m_max: int) -> int | None:
    """Verify the two power-weighted central-binomial identities

        sum_{i<m} C(2i, i)   * 2**(2m-1-2i) == m * C(2m, m)
        sum_{i<m} C(2i+1, i) * 2**(2m-1-2i) == (m+1) * C(2m+1, m) - 2**(2m)

    for every 1 <= m <= m_max. Returns None on success, else the first
    failing m (expected: never).
    """
    if m_max < 1:
        raise ValueError(f"need m_max >= 1, got {m_max}")
    for m in range(1, m_max + 1):
        lhs_even = sum(binom(2 * i, i) * 2 ** (2 * m - 1 - 2 * i) for i in range(m))
        if lhs_even != m * binom(2 * m, m):
            return m
        lhs_odd = sum(binom(2 * i + 1, i) * 2 ** (2 * m - 1 - 2 * i) for i in range(m))
        if lhs_odd != (m + 1) * binom(2 * m + 1, m) - 2 ** (2 * m):
            return m
    return None
