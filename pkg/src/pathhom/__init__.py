"""Exact counting of homomorphisms between undirected paths.

Closed-form evaluation (alternating reflection sums, polynomial epispectrum
entries, telescoped breakdowns) cross-checked against transfer-step DP and
exhaustive enumeration, with a banded lattice-path layer and congruence
class reconstruction. The hot kernels run on an optional compiled backend;
see `pathhom.backend`.
"""

from .backend import available_backends, has_fast
from .closedform import (
    LkTermBreakdown,
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
from .congruence import (
    ArrangementResult,
    arrangements,
    epispectrum_brute,
    epispectrum_formula,
    induced_partition_census,
    iter_set_partitions,
    kernel_partition,
)
from .core import (
    Count,
    EnumerationLimitError,
    Epispectrum,
    FormulaDomainError,
    InconsistencyError,
    PathHom,
    SetPartition,
    binom,
)
from .lattice import (
    BandSpec,
    decode_word,
    encode_hom,
    hom1_via_lattice,
    lattice_count_banded,
    lattice_count_banded_brute,
    lattice_count_free,
    word_endpoint,
)
from .oracle import (
    StartCountVector,
    enumerate_homs,
    epi_count_brute,
    hom_count_dp,
    hom_count_enum,
    hom_start_counts_dp,
)

__version__ = "0.1.0"

__all__ = [
    "ArrangementResult",
    "BandSpec",
    "Count",
    "EnumerationLimitError",
    "Epispectrum",
    "FormulaDomainError",
    "InconsistencyError",
    "LkTermBreakdown",
    "PathHom",
    "SetPartition",
    "StartCountVector",
    "arrangements",
    "available_backends",
    "binom",
    "check_binomial_identities",
    "decode_word",
    "encode_hom",
    "end_count_closed",
    "enumerate_homs",
    "epi_count_brute",
    "epi_count_ie",
    "epispectrum_brute",
    "epispectrum_formula",
    "has_fast",
    "hom1_count_closed",
    "hom1_via_lattice",
    "hom_count_closed",
    "hom_count_dp",
    "hom_count_enum",
    "hom_j_count_closed",
    "hom_start_counts_dp",
    "induced_partition_census",
    "iter_set_partitions",
    "kernel_partition",
    "lattice_count_banded",
    "lattice_count_banded_brute",
    "lattice_count_free",
    "lk_closed",
    "lk_telescope",
    "lk_via_hom",
    "word_endpoint",
]
