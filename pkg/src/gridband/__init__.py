"""gridband: exact bandwidth of d-fold products of paths P_n^d.

The bandwidth is computed in closed form from coefficient rows of
(1 + x + ... + x^n)^d, realized concretely by the Hales (graded reverse
lexicographic) labeling, bracketed by central coefficients, compared with
the lexicographic labeling, and certified at desk scale by an exhaustive
branch-and-bound oracle.
"""

from .bandwidth import (
    AsymptoticEstimate,
    BoundsPair,
    asymptotic_estimate,
    bounds,
    bw_hales,
    bw_hypercube,
    bw_lex,
    clt_estimate,
    ratio_table,
)
from .coeffs import (
    CoeffRow,
    SortedCoeffArray,
    coeff,
    coeff_row,
    max_coeff,
    middle_window,
    sorted_desc,
    top_sum,
    trinomial_coeff,
)
from .grid import (
    BandwidthReport,
    BudgetExceededError,
    GridParams,
    LabelingSpec,
    edges,
    format_vertex,
    labeling_bandwidth,
    lex_rank,
    lex_unrank,
    load_labeling_file,
    neighbors,
    parse_vertex,
    weight,
)
from .hales import (
    Vertex,
    WeightClass,
    block_matrix,
    hales_compare,
    hales_enumerate,
    hales_rank,
    hales_sort_key,
    hales_unrank,
    weight_class,
)
from .oracle import (
    OptimalityCertificate,
    OptimalityCheck,
    SearchBudget,
    brute_force_bw,
    certificate_to_text,
    verify_optimal,
)

__version__ = "0.1.0"
