"""Compressive sensing of signals sparse in the discrete Hermite basis."""

__version__ = "0.1.0"

from .basis import (
    HermiteBasis,
    MAX_ORDER,
    NumericalError,
    build_basis,
    hermite_function,
    hermite_roots,
    orthonormality_defect,
)
from .detect import (
    ReconstructionResult,
    ThresholdSpec,
    detect_support,
    erf_approx,
    erf_inverse,
    estimate_sigma_from_coefficients,
    reconstruct,
    reconstruct_on_support,
    threshold_closed_form,
    threshold_exact,
)
from .sampling import (
    Measurement,
    SamplingMask,
    SparseSignalSpec,
    initial_estimate,
    load_problem,
    measure,
    problem_from_dict,
    random_mask,
    splitmix64,
    synthesize,
    trial_seed,
)
from .stats import (
    ComponentStatistics,
    component_energy,
    expected_component_stats,
    folded_normal_cdf,
    folded_normal_pdf,
    half_normal_cdf,
    half_normal_pdf,
    misdetection_probability_approx,
    misdetection_probability_exact,
    multi_component_stats,
    noise_variance,
    signal_variance_estimated,
    signal_variance_exact,
)
from .transform import forward, inverse

__all__ = [
    "__version__",
    "HermiteBasis",
    "MAX_ORDER",
    "NumericalError",
    "build_basis",
    "hermite_function",
    "hermite_roots",
    "orthonormality_defect",
    "forward",
    "inverse",
    "Measurement",
    "SamplingMask",
    "SparseSignalSpec",
    "initial_estimate",
    "load_problem",
    "measure",
    "problem_from_dict",
    "random_mask",
    "splitmix64",
    "synthesize",
    "trial_seed",
    "ComponentStatistics",
    "component_energy",
    "expected_component_stats",
    "folded_normal_cdf",
    "folded_normal_pdf",
    "half_normal_cdf",
    "half_normal_pdf",
    "misdetection_probability_approx",
    "misdetection_probability_exact",
    "multi_component_stats",
    "noise_variance",
    "signal_variance_estimated",
    "signal_variance_exact",
    "ReconstructionResult",
    "ThresholdSpec",
    "detect_support",
    "erf_approx",
    "erf_inverse",
    "estimate_sigma_from_coefficients",
    "reconstruct",
    "reconstruct_on_support",
    "threshold_closed_form",
    "threshold_exact",
]
