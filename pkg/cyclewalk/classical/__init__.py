"""
Classical symmetric random walk on the cycle, for contrast with the quantum walk.
"""
from .chain import (
    ClassicalChain,
    GeometricBound,
    classical_blocks,
    classical_empirical_sigma,
    classical_moments,
    classical_profile,
    classical_step,
    deviation_history,
    geometric_bound_fit,
    start_chain,
)
