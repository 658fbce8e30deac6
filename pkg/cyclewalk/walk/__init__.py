"""
Hadamard walk on the cycle: state, one-step rule, evolution matrix.
"""
from .state import (
    MIN_SITES,
    SiteDistribution,
    WalkConfig,
    WaveState,
    build_initial_state,
    distribution,
    evolve,
    site_probability,
    step,
)
from .trajectory import probability_blocks, trajectory_blocks
from .unitary import build_unitary, unitarity_defect

__all__ = [
    "MIN_SITES",
    "SiteDistribution",
    "WalkConfig",
    "WaveState",
    "build_initial_state",
    "build_unitary",
    "distribution",
    "evolve",
    "probability_blocks",
    "site_probability",
    "step",
    "trajectory_blocks",
    "unitarity_defect",
]
