"""
Walker state on the N-site cycle and the one-step Hadamard rule.

Amplitudes are stored interleaved as (L0, R0, L1, R1, ..., L_{N-1}, R_{N-1}),
so index 2n is the left chirality of site n and 2n+1 the right one.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from ..core.errors import ConsistencyError, DomainError

MIN_SITES = 3
NORM_TOLERANCE = 1e-12
INV_SQRT2 = 1.0 / math.sqrt(2.0)

logger = logging.getLogger(__name__)


def check_sites(sites: int) -> int:
    if isinstance(sites, bool) or int(sites) != sites:
        raise DomainError(f"number of sites must be an integer, got {sites!r}")
    sites = int(sites)
    if sites < MIN_SITES:
        raise DomainError(f"number of sites must be at least {MIN_SITES}, got {sites}")
    return sites


def check_site(sites: int, n: int) -> int:
    if not 0 <= n < sites:
        raise DomainError(f"site index {n} out of range 0..{sites - 1}")
    return int(n)


def _frozen(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


@dataclass(frozen=True)
class WaveState:
    """Full 2N-component state of the walker at step `time`."""

    size: int
    amplitudes: np.ndarray = field(repr=False)
    time: int = 0

    def __post_init__(self):
        size = check_sites(self.size)
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 2 * size:
            raise DomainError(f"expected {2 * size} amplitudes for N={size}, got {amps.shape[0]}")
        if self.time < 0:
            raise DomainError(f"time must be non-negative, got {self.time}")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > NORM_TOLERANCE:
            raise ConsistencyError(f"state is not normalized: |psi|^2 = {norm2!r}")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "amplitudes", _frozen(amps))

    @property
    def left(self) -> np.ndarray:
        return self.amplitudes[0::2]

    @property
    def right(self) -> np.ndarray:
        return self.amplitudes[1::2]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


@dataclass(frozen=True)
class WalkConfig:
    """
    System size and initial condition.

    The initial state is |L,0,0> = alpha, |R,0,0> = i*sqrt(1 - alpha^2) unless
    an explicit `initial` state is given, in which case alpha is ignored.
    """

    sites: int
    alpha: float = 1.0
    initial: WaveState | None = None

    def __post_init__(self):
        object.__setattr__(self, "sites", check_sites(self.sites))
        if not 0.0 <= self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.initial is not None and self.initial.size != self.sites:
            raise DomainError(f"initial state has N={self.initial.size}, config has N={self.sites}")


@dataclass(frozen=True)
class SiteDistribution:
    size: int
    probs: np.ndarray = field(repr=False)

    def __post_init__(self):
        probs = np.array(self.probs, dtype=np.float64).reshape(-1)
        if probs.shape[0] != self.size:
            raise DomainError(f"expected {self.size} probabilities, got {probs.shape[0]}")
        object.__setattr__(self, "probs", _frozen(probs))

    def total(self) -> float:
        return float(self.probs.sum())


def build_initial_state(config: WalkConfig) -> WaveState:
    if config.initial is not None:
        return config.initial
    amps = np.zeros(2 * config.sites, dtype=np.complex128)
    amps[0] = config.alpha
    amps[1] = 1j * math.sqrt(1.0 - config.alpha**2)
    return WaveState(config.sites, amps, 0)


def step_amplitudes(amps: np.ndarray) -> np.ndarray:
    """
    One application of the Hadamard rule to an interleaved amplitude vector.

    L'_n = (L_{n+1} + R_{n+1}) / sqrt(2)
    R'_n = (L_{n-1} - R_{n-1}) / sqrt(2)
    """
    left = amps[0::2]
    right = amps[1::2]
    out = np.empty_like(amps)
    out[0::2] = np.roll(left + right, -1) * INV_SQRT2
    out[1::2] = np.roll(left - right, 1) * INV_SQRT2
    return out


def step(state: WaveState) -> WaveState:
    return WaveState(state.size, step_amplitudes(state.amplitudes), state.time + 1)


def evolve(state: WaveState, t: int) -> WaveState:
    if t < 0:
        raise DomainError(f"number of steps must be non-negative, got {t}")
    if t == 0:
        return state
    amps = state.amplitudes
    for _ in range(t):
        amps = step_amplitudes(amps)
    logger.debug("Evolved N=%d state by %d steps", state.size, t)
    return WaveState(state.size, amps, state.time + t)


def site_probability(state: WaveState, n: int) -> float:
    check_site(state.size, n)
    left = state.amplitudes[2 * n]
    right = state.amplitudes[2 * n + 1]
    return float(abs(left) ** 2 + abs(right) ** 2)


def probabilities(amps: np.ndarray) -> np.ndarray:
    """Site probabilities for one amplitude vector or a (B, 2N) block of them."""
    weights = np.abs(amps) ** 2
    return weights.reshape(*weights.shape[:-1], -1, 2).sum(axis=-1)


def distribution(state: WaveState) -> SiteDistribution:
    return SiteDistribution(state.size, probabilities(state.amplitudes))
