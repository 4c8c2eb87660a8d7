"""Ground-state bounds and solvers for positive/negative Hopfield forms."""

from ._hopfield import (
    BaselineBounds,
    BoundResult,
    CapacityError,
    ComparisonSample,
    ComparisonSpec,
    ConcentrationReport,
    ConcentrationRow,
    Ensemble,
    EnsembleConfig,
    EnsembleSummary,
    Form,
    GroundStateResult,
    HopfieldInstance,
    Method,
    NumericalError,
    SearchConfig,
    SpinVector,
    Strategy,
    baseline_bounds,
    bit_flip_search,
    comparison_smoke_test,
    concentration_report,
    erfc,
    evaluate,
    exact_ground_state,
    exact_ground_state_naive,
    gamma_hat,
    lifted_lower_bound,
    lifted_upper_bound,
    make_instance,
    minimize_scalar,
    mix_seed,
    negative_objective,
    positive_objective,
    read_matrix_file,
    rows_for,
    run_ensemble,
    sample_instance,
)

__all__ = [
    "BaselineBounds",
    "BoundResult",
    "CapacityError",
    "ComparisonSample",
    "ComparisonSpec",
    "ConcentrationReport",
    "ConcentrationRow",
    "Ensemble",
    "EnsembleConfig",
    "EnsembleSummary",
    "Form",
    "GroundStateResult",
    "HopfieldInstance",
    "Method",
    "NumericalError",
    "SearchConfig",
    "SpinVector",
    "Strategy",
    "baseline_bounds",
    "bit_flip_search",
    "comparison_smoke_test",
    "concentration_report",
    "erfc",
    "evaluate",
    "exact_ground_state",
    "exact_ground_state_naive",
    "gamma_hat",
    "lifted_lower_bound",
    "lifted_upper_bound",
    "make_instance",
    "minimize_scalar",
    "mix_seed",
    "negative_objective",
    "positive_objective",
    "read_matrix_file",
    "rows_for",
    "run_ensemble",
    "sample_instance",
]
