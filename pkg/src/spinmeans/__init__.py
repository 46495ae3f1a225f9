"""Spin-1/2 states as mean spin projections, and their superposition rule."""
from .errors import *  # noqa: F401,F403
from .measure import (
    EstimatedMeans,
    ExperimentReport,
    ShotRecord,
    end_to_end_experiment,
    estimate_means,
    project_to_pure,
    simulate_shots,
)
from .qcore import (
    DensityMatrix2,
    MeanSpinVector,
    ProbabilityTriple,
    SigmaTriple,
    Spinor,
    density_from_spinor,
    purity,
)
from .represent import (
    density_from_means,
    density_from_probabilities,
    means_from_density,
    means_from_probabilities,
    means_from_state,
    probabilities_from_means,
    state_from_means,
)
from .superpose import (
    SuperpositionResult,
    coefficients_from_sigma,
    gauge_coefficients,
    normalization_T,
    sigma_from_coefficients,
    superpose,
    superpose_checked,
    superpose_closed,
    superpose_oracle,
)

__version__ = "0.1.0"
