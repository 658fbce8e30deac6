"""
Exact distribution of the symmetric classical random walk on the cycle.

Each step sends half of the mass at n to n-1 and half to n+1. The
distribution is evolved exactly, so its temporal fluctuation can be set
against the quantum walk without sampling noise.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Tuple

import numpy as np

from ..core.config import DEFAULT_BLOCK_SIZE
from ..core.errors import DomainError
from ..stats.empirical import RunMoments, accumulate, check_steps, default_mean
from ..walk.state import check_site, check_sites
from ..walk.trajectory import iterate_blocks

ROUNDOFF_FLOOR = 1e-13

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassicalChain:
    size: int
    dist: np.ndarray = field(repr=False)
    time: int = 0

    def __post_init__(self):
        size = check_sites(self.size)
        dist = np.array(self.dist, dtype=np.float64).reshape(-1)
        if dist.shape[0] != size:
            raise DomainError(f"expected {size} probabilities, got {dist.shape[0]}")
        if np.any(dist < 0):
            raise DomainError("probabilities must be non-negative")
        dist.setflags(write=False)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "dist", dist)


@dataclass(frozen=True)
class GeometricBound:
    """Measured constants of |P(n, t) - 1/N| <= C a^t."""

    C: float
    a: float
    slope: float
    points: int


def start_chain(sites: int, site: int = 0) -> ClassicalChain:
    sites = check_sites(sites)
    dist = np.zeros(sites)
    dist[check_site(sites, site)] = 1.0
    return ClassicalChain(sites, dist, 0)


def _step_dist(dist: np.ndarray) -> np.ndarray:
    return 0.5 * (np.roll(dist, 1) + np.roll(dist, -1))


def classical_step(chain: ClassicalChain) -> ClassicalChain:
    return ClassicalChain(chain.size, _step_dist(chain.dist), chain.time + 1)


@lru_cache(maxsize=64)
def _transition_power(sites: int, block: int) -> np.ndarray:
    """Transpose of the B-step transition matrix."""
    matrix = np.zeros((sites, sites))
    for n in range(sites):
        matrix[n, (n - 1) % sites] = 0.5
        matrix[n, (n + 1) % sites] = 0.5
    out = np.ascontiguousarray(np.linalg.matrix_power(matrix, block).T)
    out.setflags(write=False)
    return out


def classical_blocks(
    chain: ClassicalChain, steps: int, block: int = DEFAULT_BLOCK_SIZE
) -> Iterator[Tuple[int, np.ndarray]]:
    return iterate_blocks(
        chain.dist,
        _step_dist,
        lambda size: _transition_power(chain.size, size),
        steps,
        block,
    )


def classical_moments(sites: int, steps: int, block: int = DEFAULT_BLOCK_SIZE) -> RunMoments:
    steps = check_steps(steps)
    chain = start_chain(sites)
    return accumulate(classical_blocks(chain, steps, block), chain.size, steps)


def classical_empirical_sigma(sites: int, steps: int, n: int, block: int = DEFAULT_BLOCK_SIZE) -> float:
    """Finite-T sigma from a start at site 0; mean 1/N for odd N, same-run mean for even N."""
    sites = check_sites(sites)
    check_site(sites, n)
    moments = classical_moments(sites, steps, block)
    return float(moments.sigma(default_mean(sites))[n])


def classical_profile(sites: int, steps: int, block: int = DEFAULT_BLOCK_SIZE) -> np.ndarray:
    sites = check_sites(sites)
    return classical_moments(sites, steps, block).sigma(default_mean(sites))


def deviation_history(sites: int, n: int, horizon: int) -> np.ndarray:
    """|P(n, t) - 1/N| for t = 0 .. horizon-1."""
    sites = check_sites(sites)
    check_site(sites, n)
    rows = np.concatenate([probs for _, probs in classical_blocks(start_chain(sites), horizon)])
    return np.abs(rows[:, n] - 1.0 / sites)


def geometric_bound_fit(sites: int, n: int = 0, t_range: Tuple[int, int] = (10, 200)) -> GeometricBound:
    """
    Log-linear fit of the tail supremum sup_{s >= t} |P(n, s) - 1/N| over
    t in t_range. Values below the roundoff floor are dropped.
    """
    start, stop = t_range
    if not 0 <= start < stop:
        raise DomainError(f"invalid fit range {t_range}")
    history = deviation_history(sites, n, stop + 1)
    tail_sup = np.maximum.accumulate(history[::-1])[::-1]
    t = np.arange(start, stop + 1)
    values = tail_sup[start : stop + 1]
    keep = values > ROUNDOFF_FLOOR
    if keep.sum() < 2:
        raise DomainError(f"deviation reaches roundoff before t={start}; shorten the fit range")
    slope, intercept = np.polyfit(t[keep], np.log(values[keep]), 1)
    logger.debug("Geometric fit N=%d n=%d: slope %.4g over %d points", sites, n, slope, int(keep.sum()))
    return GeometricBound(C=float(np.exp(intercept)), a=float(np.exp(slope)), slope=float(slope), points=int(keep.sum()))
