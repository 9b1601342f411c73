"""Swarm engagement simulation and defender trajectory optimization.

Thin Python surface over the C++ core: scenario configs, the four
engagement engines (p0 stochastic, p1 decoupled, p2 weighted forces,
p3 threshold), Monte Carlo ensembles, and the trajectory optimizer.
"""

from aegis._core import (
    ComparisonReport,
    EngineComparison,
    EnsembleSummary,
    OptimizationResult,
    ScenarioConfig,
    SimResult,
    SwarmState,
    TrajectoryParams,
    baseline_stationary,
    compare_engines,
    config_from_json,
    damage_kernel,
    initial_state,
    load_config,
    load_trajectories,
    objective,
    optimize,
    run_ensemble,
    simulate,
)

__version__ = "0.1.0"

__all__ = [
    "ComparisonReport",
    "EngineComparison",
    "EnsembleSummary",
    "OptimizationResult",
    "ScenarioConfig",
    "SimResult",
    "SwarmState",
    "TrajectoryParams",
    "baseline_stationary",
    "compare_engines",
    "config_from_json",
    "damage_kernel",
    "initial_state",
    "load_config",
    "load_trajectories",
    "objective",
    "optimize",
    "run_ensemble",
    "simulate",
]
