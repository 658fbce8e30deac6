"""
Dense 2N x 2N evolution matrix of the walk.

Block row n holds P = [[1, 1], [0, 0]] / sqrt(2) in block column n+1 and
Q = [[0, 0], [1, -1]] / sqrt(2) in block column n-1 (indices mod N). The
matrix is used for verification and for block propagation of trajectories;
single steps go through `state.step_amplitudes`.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .state import INV_SQRT2, check_sites


@lru_cache(maxsize=64)
def cached_unitary(sites: int) -> np.ndarray:
    size = 2 * sites
    matrix = np.zeros((size, size), dtype=np.complex128)
    for n in range(sites):
        ahead = (n + 1) % sites
        behind = (n - 1) % sites
        matrix[2 * n, 2 * ahead] = INV_SQRT2
        matrix[2 * n, 2 * ahead + 1] = INV_SQRT2
        matrix[2 * n + 1, 2 * behind] = INV_SQRT2
        matrix[2 * n + 1, 2 * behind + 1] = -INV_SQRT2
    matrix.setflags(write=False)
    return matrix


def build_unitary(sites: int) -> np.ndarray:
    return cached_unitary(check_sites(sites)).copy()


def unitarity_defect(matrix: np.ndarray) -> float:
    """max |M^dagger M - I| over all entries."""
    gram = matrix.conj().T @ matrix
    return float(np.max(np.abs(gram - np.eye(matrix.shape[0]))))


@lru_cache(maxsize=64)
def block_propagator(sites: int, block: int) -> np.ndarray:
    """Transpose of M_N^block, for right-multiplying rows of states."""
    power = np.linalg.matrix_power(cached_unitary(check_sites(sites)), block)
    out = np.ascontiguousarray(power.T)
    out.setflags(write=False)
    return out
