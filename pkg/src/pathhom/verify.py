"""Whole-system cross-verification: every formula against every oracle.

Each suite returns pass/fail plus a one-line detail; the CLI `verify`
subcommand runs them all and also prints the polynomial-threshold table
(per entry index k, the smallest n from which the exhaustive count agrees
with the binomial pair and keeps agreeing).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import congruence, lattice, oracle
from .closedform import (
    _lk_pair,
    check_binomial_identities,
    end_count_closed,
    epi_count_ie,
    hom1_count_closed,
    hom_count_closed,
    hom_j_count_closed,
    lk_closed,
    lk_telescope,
    lk_via_hom,
)
from .core import PathHom, binom
from .lattice import BandSpec


@dataclass(frozen=True)
class SuiteResult:
    name: str
    ok: bool
    detail: str


def forward_differences(values: list[int], order: int) -> list[int]:
    out = list(values)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out


def _binomial_suite() -> tuple[bool, str]:
    for a in range(1, 65):
        for b in range(0, a + 1):
            if binom(a, b) != binom(a, a - b):
                return False, f"symmetry fails at ({a}, {b})"
            if 1 <= b <= a - 1 and binom(a, b) != binom(a - 1, b - 1) + binom(a - 1, b):
                return False, f"triangle recurrence fails at ({a}, {b})"
    return True, "triangle recurrence and symmetry for a <= 64"


def _dp_recurrence_suite(max_n: int, max_k: int) -> tuple[bool, str]:
    top_n, top_k = min(max_n, 40), min(max_k, 40)
    for k in range(2, top_k + 1):
        prev = oracle.hom_start_counts_dp(1, k)
        for n in range(2, top_n + 1):
            cur = oracle.hom_count_dp(n, k)
            if cur != 2 * prev.total - 2 * prev[1]:
                return False, f"doubling recurrence fails at (n={n}, k={k})"
            prev = oracle.hom_start_counts_dp(n, k)
            if any(prev[j] != prev[k + 1 - j] for j in range(1, k + 1)):
                return False, f"start-vector symmetry fails at (n={n}, k={k})"
    return True, f"doubling recurrence and start symmetry on {top_n}x{top_k}"


def _enumeration_suite(max_n: int, max_k: int) -> tuple[bool, str]:
    top_n, top_k = min(max_n, 12), min(max_k, 12)
    for n in range(1, top_n + 1):
        for k in range(1, top_k + 1):
            homs = list(oracle.enumerate_homs(n, k))
            if len(homs) != oracle.hom_count_dp(n, k):
                return False, f"stream length != DP at (n={n}, k={k})"
            images = [h.images for h in homs]
            if images != sorted(set(images)):
                return False, f"stream not strictly lexicographic at (n={n}, k={k})"
    return True, f"stream length and order on {top_n}x{top_k}"


def _closed_hom_suite(max_n: int, max_k: int) -> tuple[bool, str]:
    for n in range(1, max_n + 1):
        for k in range(1, max_k + 1):
            if hom_count_closed(n, k) != oracle.hom_count_dp(n, k):
                return False, f"closed != DP at (n={n}, k={k})"
    return True, f"closed hom count vs DP on {max_n}x{max_k}"


def _start_split_suite(max_n: int, max_k: int) -> tuple[bool, str]:
    top_n, top_k = min(max_n, 40), min(max_k, 40)
    for n in range(1, top_n + 1):
        for k in range(1, top_k + 1):
            vec = oracle.hom_start_counts_dp(n, k)
            if hom1_count_closed(n, k) != vec[1]:
                return False, f"start-1 reflection sum != DP at (n={n}, k={k})"
            if lattice.hom1_via_lattice(n, k) != vec[1]:
                return False, f"start-1 lattice sum != DP at (n={n}, k={k})"
            for j in range(1, k + 1):
                if hom_j_count_closed(n, k, j) != vec[j]:
                    return False, f"start-split formula != DP at (n={n}, k={k}, j={j})"
    return True, f"three start-1 routes plus all start vertices on {top_n}x{top_k}"


def _end_count_suite(max_n: int) -> tuple[bool, str]:
    for n in range(1, max_n + 1):
        if end_count_closed(n) != oracle.hom_count_dp(n, n):
            return False, f"endomorphism closed form != DP at n={n}"
    return True, f"endomorphism closed form vs DP for n <= {max_n}"


def _reflection_suite(max_n: int) -> tuple[bool, str]:
    top = min(max_n, 16)
    for steps in range(0, top + 1):
        for e in range(0, steps + 1):
            nn = steps - e
            for t in range(0, 9):
                for s in range(0, 9):
                    band = BandSpec(t, s)
                    if (lattice.lattice_count_banded(e, nn, band)
                            != lattice.lattice_count_banded_brute(e, nn, band)):
                        return False, f"reflection != grid DP at (e={e}, nn={nn}, t={t}, s={s})"
    return True, f"reflection sum vs grid DP for e+nn <= {top}, t,s <= 8"


def _bijection_suite(max_n: int, max_k: int) -> tuple[bool, str]:
    top_n, top_k = min(max_n, 10), min(max_k, 10)
    for n in range(1, top_n + 1):
        for k in range(1, top_k + 1):
            words = set()
            for f in oracle.enumerate_homs(n, k, start=1):
                w = lattice.encode_hom(f)
                if w in words:
                    return False, f"encoding not injective at (n={n}, k={k})"
                words.add(w)
                if lattice.decode_word(w, k) != f:
                    return False, f"decode does not invert encode at (n={n}, k={k})"
            expected = oracle.hom_start_counts_dp(n, k)[1]
            if len(words) != expected:
                return False, f"word count != start-1 count at (n={n}, k={k})"
    return True, f"encode/decode bijection on {top_n}x{top_k}"


def _epi_suite(max_n: int, enum_limit: int) -> tuple[bool, str]:
    top = min(max_n, enum_limit, 12)
    for n in range(1, top + 1):
        for k in range(1, n + 1):
            ie = oracle.epi_count_brute(n, k, limit=enum_limit)
            if epi_count_ie(n, k) != ie:
                return False, f"inclusion-exclusion != brute at (n={n}, k={k})"
            if epi_count_ie(n, k, hom_count=oracle.hom_count_dp) != ie:
                return False, f"inclusion-exclusion over DP != brute at (n={n}, k={k})"
    return True, f"surjection inclusion-exclusion vs enumeration for n <= {top}"


def _lk_routes_suite(max_n: int) -> tuple[bool, str]:
    for k in range(1, max_n // 2 + 1):
        for n in range(2 * k, max_n + 1):
            closed = lk_closed(n, k)
            if lk_via_hom(n, k) != closed:
                return False, f"three-term route != closed form at (n={n}, k={k})"
            breakdown = lk_telescope(n, k)
            if breakdown.total != closed:
                return False, f"telescoped total != closed form at (n={n}, k={k})"
    return True, f"closed/three-term/telescoped agree for 2k <= n <= {max_n}"


def _identities_suite() -> tuple[bool, str]:
    first_bad = check_binomial_identities(500)
    if first_bad is not None:
        return False, f"identity fails first at m={first_bad}"
    return True, "power-weighted central-binomial identities for m <= 500"


def _epispectrum_suite(max_n: int, enum_limit: int) -> tuple[bool, str]:
    top = min(max_n, enum_limit)
    for n in range(2, top + 1):
        brute = congruence.epispectrum_brute(n, limit=enum_limit)
        formula = congruence.epispectrum_formula(n)
        if brute != formula:
            return False, f"brute != formula epispectrum at n={n}"
        for k in range(1, n):
            if n >= 2 * k and brute.entry(k) != lk_closed(n, k):
                return False, f"epispectrum entry != closed form at (n={n}, k={k})"
    return True, f"brute/formula/closed epispectra agree for n <= {top}"


def _factor_two_suite(max_n: int, enum_limit: int) -> tuple[bool, str]:
    top = min(max_n, enum_limit, 12)
    for n in range(2, top + 1):
        census = congruence.induced_partition_census(n, limit=enum_limit)
        by_blocks: dict[int, int] = {}
        for p in census:
            by_blocks[p.block_count] = by_blocks.get(p.block_count, 0) + 1
        for r in range(1, n + 1):
            if 2 * by_blocks.get(r, 0) != oracle.epi_count_brute(n, r, limit=enum_limit):
                return False, f"partition count * 2 != surjection count at (n={n}, r={r})"
        spectrum = congruence.epispectrum_brute(n, limit=enum_limit)
        if sum(spectrum.values) != len(census):
            return False, f"epispectrum sum != census size at n={n}"
    return True, f"two surjections per induced partition for n <= {top}"


def _arrangement_suite(max_n: int) -> tuple[bool, str]:
    top = min(max_n, 10)
    for n in range(2, top + 1):
        induced = congruence.induced_partition_census(n)
        for p in congruence.iter_set_partitions(n):
            res = congruence.arrangements(p)
            if res.valid != (p in induced):
                return False, f"arrangement validity mismatch for {p.text_form()}"
            if res.valid:
                if res.orderings[1] != tuple(reversed(res.orderings[0])):
                    return False, f"orderings not mutual reverses for {p.text_form()}"
                if any(congruence.kernel_partition(w) != p for w in res.witnesses):
                    return False, f"witness kernel mismatch for {p.text_form()}"
    return True, f"arrangement reconstruction over all partitions for n <= {top}"


def _shift_normalization_suite(max_n: int) -> tuple[bool, str]:
    top = min(max_n, 10)
    for n in range(1, top + 1):
        for f in oracle.enumerate_homs(n, n):
            lo = min(f.images)
            shifted = tuple(v - lo + 1 for v in f.images)
            r = len(set(shifted))
            g = PathHom(n, r, shifted)
            if not g.is_surjective():
                return False, f"shifted map not surjective for {f.images}"
            if congruence.kernel_partition(g) != congruence.kernel_partition(f):
                return False, f"shift changes the kernel for {f.images}"
    return True, f"image shifting preserves kernels for n <= {top}"


def _degree_suite(max_k: int) -> tuple[bool, str]:
    top_k = min(max_k, 10)
    for k in range(1, top_k + 1):
        order = -((k - 2) // -2) + 1  # ceil((k-2)/2) + 1
        ns = list(range(2 * k, 3 * k + 5))
        values = [lk_closed(n, k) for n in ns]
        diffs = forward_differences(values, order)
        if any(d != 0 for d in diffs):
            return False, f"difference of order {order} does not vanish for k={k}"
    return True, f"polynomial degree ceil((k-2)/2) confirmed for k <= {top_k}"


def threshold_table(max_n: int, max_k: int, enum_limit: int = 14) -> list[tuple[int, int | None]]:
    """For each entry index k, the smallest n at which the exhaustive count
    first agrees with the binomial pair and never disagrees afterwards
    (within the enumerable range). None when agreement never settles."""
    top_n = min(max_n, enum_limit)
    spectra = {n: congruence.epispectrum_brute(n, limit=enum_limit)
               for n in range(2, top_n + 1)}
    rows: list[tuple[int, int | None]] = []
    for k in range(1, min(max_k, top_n - 1) + 1):
        settle: int | None = None
        for n in range(k + 1, top_n + 1):
            if spectra[n].entry(k) == _lk_pair(n, k):
                if settle is None:
                    settle = n
            else:
                settle = None
        rows.append((k, settle))
    return rows


def run_all(max_n: int, max_k: int, enum_limit: int = 14) -> list[SuiteResult]:
    suites = [
        ("binomial-basics", lambda: _binomial_suite()),
        ("dp-recurrence", lambda: _dp_recurrence_suite(max_n, max_k)),
        ("enumeration-vs-dp", lambda: _enumeration_suite(max_n, max_k)),
        ("closed-hom-vs-dp", lambda: _closed_hom_suite(max_n, max_k)),
        ("start-split-routes", lambda: _start_split_suite(max_n, max_k)),
        ("endomorphism-count", lambda: _end_count_suite(max_n)),
        ("reflection-vs-grid-dp", lambda: _reflection_suite(max_n)),
        ("encode-decode-bijection", lambda: _bijection_suite(max_n, max_k)),
        ("surjection-counts", lambda: _epi_suite(max_n, enum_limit)),
        ("spectrum-entry-routes", lambda: _lk_routes_suite(max_n)),
        ("binomial-identities", lambda: _identities_suite()),
        ("epispectrum-triple", lambda: _epispectrum_suite(max_n, enum_limit)),
        ("partition-factor-two", lambda: _factor_two_suite(max_n, enum_limit)),
        ("arrangement-reconstruction", lambda: _arrangement_suite(max_n)),
        ("shift-normalization", lambda: _shift_normalization_suite(max_n)),
        ("polynomial-degree", lambda: _degree_suite(max_k)),
    ]
    results = []
    for name, fn in suites:
        ok, detail = fn()
        results.append(SuiteResult(name, ok, detail))
    return results
