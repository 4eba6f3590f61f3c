"""Entanglement detection criteria benchmarked on Haar-random states.

The package samples rank-k bipartite mixed states uniformly under the
Haar measure, applies the partial-transpose, reduction, majorization,
entropy, and realignment criteria plus logarithmic negativity, and
aggregates detection statistics over (d1, d2, k) grids.
"""

from .linalg import (
    DensityMatrix,
    hermitian_spectrum,
    partial_trace,
    partial_transpose,
    purity,
    realign,
    spectrum,
    trace_norm,
    von_neumann_entropy,
)
from .sampling import SampleSpec, is_npt, numerical_rank, sample_reduced_state, sample_tripartite_pure
from .criteria import (
    CRITERIA,
    StateRecord,
    Verdict,
    detect_entropy,
    detect_majorization,
    detect_pt,
    detect_realignment,
    detect_reduction,
    evaluate_state,
    log_negativity,
)
from .analytics import (
    CriterionStats,
    SweepStats,
    aggregate,
    average_purity,
    entropy_rank_threshold,
    hierarchy_order,
    ln_threshold,
    page_entropies,
    ppt_rank_sufficient,
    realignment_rank_bound,
)
from .harness import SweepConfig, evaluate_trial, run_cell, run_sweep

__version__ = "0.1.0"
