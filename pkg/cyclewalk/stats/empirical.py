"""
Finite-T time averages and temporal standard deviations from simulation.

One trajectory serves every site. Deviations are accumulated about 1/N so
that both the same-run mean and the exact odd-N mean come out of one pass
without cancellation.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from ..core.config import DEFAULT_BLOCK_SIZE
from ..core.errors import DomainError, require_odd
from ..walk.state import SiteDistribution, WalkConfig, build_initial_state, check_site
from ..walk.trajectory import probability_blocks
from .profile import Method, SigmaProfile

MeanMode = Literal["run", "exact"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunMoments:
    """Per-site first and second moments of P(n, t) - 1/N over t < steps."""

    size: int
    steps: int
    shifted_mean: np.ndarray
    shifted_square: np.ndarray

    def mean(self) -> np.ndarray:
        return self.shifted_mean + 1.0 / self.size

    def variance(self, mean: MeanMode = "run") -> np.ndarray:
        if mean == "exact":
            require_odd("exact-mean sigma", self.size)
            return self.shifted_square
        if mean != "run":
            raise DomainError(f"unknown mean mode {mean!r}")
        return np.maximum(self.shifted_square - self.shifted_mean**2, 0.0)

    def sigma(self, mean: MeanMode = "run") -> np.ndarray:
        return np.sqrt(self.variance(mean))


def check_steps(steps: int) -> int:
    if int(steps) != steps or steps < 1:
        raise DomainError(f"number of steps T must be a positive integer, got {steps}")
    return int(steps)


def accumulate(blocks, size: int, steps: int) -> RunMoments:
    total = np.zeros(size)
    total_sq = np.zeros(size)
    for _, probs in blocks:
        dev = probs - 1.0 / size
        total += dev.sum(axis=0)
        total_sq += (dev * dev).sum(axis=0)
    return RunMoments(size, steps, total / steps, total_sq / steps)


def run_moments(config: WalkConfig, steps: int, block: int = DEFAULT_BLOCK_SIZE) -> RunMoments:
    steps = check_steps(steps)
    state = build_initial_state(config)
    moments = accumulate(probability_blocks(state, steps, block), config.sites, steps)
    logger.debug("Moments for N=%d alpha=%.6f over T=%d", config.sites, config.alpha, steps)
    return moments


def time_averaged_distribution(
    config: WalkConfig, steps: int, block: int = DEFAULT_BLOCK_SIZE
) -> SiteDistribution:
    return SiteDistribution(config.sites, run_moments(config, steps, block).mean())


def empirical_sigma(
    config: WalkConfig,
    steps: int,
    n: int,
    mean: MeanMode = "run",
    block: int = DEFAULT_BLOCK_SIZE,
) -> float:
    check_site(config.sites, n)
    return float(run_moments(config, steps, block).sigma(mean)[n])


def empirical_profile(
    config: WalkConfig,
    steps: int,
    mean: MeanMode = "run",
    block: int = DEFAULT_BLOCK_SIZE,
) -> SigmaProfile:
    values = run_moments(config, steps, block).sigma(mean)
    return SigmaProfile(config.sites, Method.EMPIRICAL, config.alpha, values, steps)


def default_mean(sites: int) -> MeanMode:
    """Exact 1/N mean where it is known (odd N), same-run mean otherwise."""
    return "exact" if sites % 2 else "run"

