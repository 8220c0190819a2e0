"""AuxPDA machines, their surface configuration graphs and a direct simulator."""

from realizability.auxpda.config_graph import ConfigGraph, SurfaceConfig, accepts, config_graph, surface_config_count
from realizability.auxpda.machine import (
    AuxPdaSpec,
    StackEffect,
    Transition,
    Triple,
    inverse_transition,
    parse_machine,
    symmetric_closure,
)
from realizability.auxpda.simulate import SimulationOutcome, SimulationResult, direct_simulate

__all__ = [
    "AuxPdaSpec",
    "ConfigGraph",
    "SimulationOutcome",
    "SimulationResult",
    "StackEffect",
    "SurfaceConfig",
    "Transition",
    "Triple",
    "accepts",
    "config_graph",
    "direct_simulate",
    "inverse_transition",
    "parse_machine",
    "surface_config_count",
    "symmetric_closure",
]
