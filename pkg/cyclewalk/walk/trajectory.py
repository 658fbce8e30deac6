"""
Blocked trajectories.

The first block of B consecutive states is produced by direct stepping; each
later block is the previous one right-multiplied by (M^B)^T, which advances
every row by B steps at once.
"""
from __future__ import annotations

import logging
from typing import Callable, Iterator, Tuple

import numpy as np

from ..core.config import DEFAULT_BLOCK_SIZE
from ..core.errors import DomainError
from .state import WaveState, probabilities, step_amplitudes
from .unitary import block_propagator

logger = logging.getLogger(__name__)


def iterate_blocks(
    initial: np.ndarray,
    advance: Callable[[np.ndarray], np.ndarray],
    propagator: Callable[[int], np.ndarray],
    steps: int,
    block: int = DEFAULT_BLOCK_SIZE,
) -> Iterator[Tuple[int, np.ndarray]]:
    """
    Yield (t0, rows) with rows[i] the vector at time t0 + i, for t0 < steps.

    `advance` maps a vector one step forward; `propagator(B)` returns the
    transposed B-step operator.
    """
    if steps < 0:
        raise DomainError(f"number of steps must be non-negative, got {steps}")
    if steps == 0:
        return
    size = max(1, min(int(block), steps))
    rows = np.empty((size, initial.shape[0]), dtype=initial.dtype)
    current = initial
    for i in range(size):
        rows[i] = current
        if i + 1 < size:
            current = advance(current)

    jump = propagator(size) if steps > size else None
    t0 = 0
    blocks = 0
    while t0 < steps:
        count = min(size, steps - t0)
        yield t0, rows[:count]
        blocks += 1
        t0 += size
        if t0 < steps:
            rows = rows @ jump
    logger.debug("Propagated %d steps in %d blocks of %d", steps, blocks, size)


def trajectory_blocks(
    state: WaveState, steps: int, block: int = DEFAULT_BLOCK_SIZE
) -> Iterator[Tuple[int, np.ndarray]]:
    """Amplitude blocks of shape (B, 2N) for t = 0 .. steps-1 relative to `state`."""
    return iterate_blocks(
        state.amplitudes,
        step_amplitudes,
        lambda size: block_propagator(state.size, size),
        steps,
        block,
    )


def probability_blocks(
    state: WaveState, steps: int, block: int = DEFAULT_BLOCK_SIZE
) -> Iterator[Tuple[int, np.ndarray]]:
    """Site-probability blocks of shape (B, N) for t = 0 .. steps-1."""
    for t0, amps in trajectory_blocks(state, steps, block):
        yield t0, probabilities(amps)
