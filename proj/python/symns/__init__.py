"""Python bindings for the symns solver."""

from ._symns import (
    ColdPressure,
    ConfigError,
    DomainError,
    EnergyFamily,
    GasModel,
    Grid,
    SolverError,
    State,
    StepControls,
    admissibility_failures,
    cfl_dt,
    convergence_orders,
    internal_energy,
    mass,
    preset_state,
    pressure,
    run_config,
    step,
    total_energy,
)

__all__ = [
    "ColdPressure",
    "ConfigError",
    "DomainError",
    "EnergyFamily",
    "GasModel",
    "Grid",
    "SolverError",
    "State",
    "StepControls",
    "admissibility_failures",
    "cfl_dt",
    "convergence_orders",
    "internal_energy",
    "mass",
    "preset_state",
    "pressure",
    "run_config",
    "step",
    "total_energy",
]
