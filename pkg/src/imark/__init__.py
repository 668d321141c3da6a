"""Sprague-Grundy engines for i-Mark subtraction-division games.

The package computes Grundy values three ways: a dense bottom-up table (the
ground-truth oracle), a convergence laboratory that races guess sequences to
measure how quickly they lock onto the truth, and an interval engine that
turns that convergence into certified values for positions far beyond any
table (polylogarithmic time in the position).
"""

from .convergence import (
    ConvergenceReport,
    GuessSeed,
    GuessSequence,
    OracleGapError,
    RangeSummary,
    advance,
    export_sweep_csv,
    measure_convergence_at,
    measure_convergence_range,
    seed_space,
    sweep_steps,
)
from .fast import (
    DivisorLattice,
    IntervalCache,
    MissingIntervalError,
    NoConvergenceError,
    compute_interval,
    divisor_lattice,
    grundy_fast,
    grundy_fast_range,
    grundy_window,
    verify_against_naive,
)
from .game import (
    POSITION_LIMIT,
    GameSpec,
    floor_div_chain,
    follower_count,
    followers,
    mex,
    nim_sum,
)
from .naive import (
    GrundyTable,
    TableTooLargeError,
    build_table,
    export_csv,
    grundy_at,
    is_p_position,
    recheck_table,
)
from .structure import (
    Violation,
    bottleneck_residues,
    check_bottleneck_grundy,
    check_conducive_convergence,
    check_no_five_consecutive,
    conducive_residues,
    export_violations_csv,
    is_bottleneck,
    is_conducive,
    proven_bound,
)

__version__ = "0.1.0"

__all__ = [
    "POSITION_LIMIT",
    "GameSpec",
    "mex",
    "nim_sum",
    "followers",
    "follower_count",
    "floor_div_chain",
    "GrundyTable",
    "TableTooLargeError",
    "build_table",
    "grundy_at",
    "is_p_position",
    "export_csv",
    "recheck_table",
    "GuessSeed",
    "GuessSequence",
    "ConvergenceReport",
    "RangeSummary",
    "OracleGapError",
    "seed_space",
    "advance",
    "measure_convergence_at",
    "measure_convergence_range",
    "sweep_steps",
    "export_sweep_csv",
    "DivisorLattice",
    "IntervalCache",
    "NoConvergenceError",
    "MissingIntervalError",
    "divisor_lattice",
    "compute_interval",
    "grundy_fast",
    "grundy_fast_range",
    "grundy_window",
    "verify_against_naive",
    "Violation",
    "is_bottleneck",
    "is_conducive",
    "proven_bound",
    "check_bottleneck_grundy",
    "check_no_five_consecutive",
    "check_conducive_convergence",
    "bottleneck_residues",
    "conducive_residues",
    "export_violations_csv",
    "__version__",
]
