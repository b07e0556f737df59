"""Dragonfly Algorithm family (continuous, binary, multi-objective), baseline optimizers,
benchmark functions and an experiment harness."""

from .baselines import GaConfig, PsoConfig, ga_optimize, gwo_optimize, pso_optimize
from .binary import (
    BinaryDragonfly,
    FeatureFitnessParams,
    TransferConfig,
    feature_fitness,
    flip_update,
    optimize_binary,
    transfer,
)
from .core import (
    Dragonfly,
    LevyParams,
    NeighborSet,
    ObjectiveError,
    RunRecord,
    SearchSpace,
    SwarmState,
    WeightSchedule,
    Weights,
    brownian_step,
    levy_step,
    make_rng,
    neighborhood,
    radius_schedule,
    weights_at,
)
from .da import DaConfig, ForceSet, optimize
from .harness import RunConfig, StatRow, convergence_dump, emit_report, run_grid
from .moda import ParetoArchive, archive_insert, dominates, hypervolume_2d, optimize_multi

__all__ = [
    "BinaryDragonfly", "DaConfig", "Dragonfly", "FeatureFitnessParams", "ForceSet", "GaConfig",
    "LevyParams", "NeighborSet", "ObjectiveError", "ParetoArchive", "PsoConfig", "RunConfig",
    "RunRecord", "SearchSpace", "StatRow", "SwarmState", "TransferConfig", "WeightSchedule", "Weights",
    "archive_insert", "brownian_step", "convergence_dump", "dominates", "emit_report", "feature_fitness",
    "flip_update", "ga_optimize", "gwo_optimize", "hypervolume_2d", "levy_step", "make_rng",
    "neighborhood", "optimize", "optimize_binary", "optimize_multi", "pso_optimize", "radius_schedule",
    "run_grid", "transfer", "weights_at",
]

__version__ = "0.1.0"
