"""
Per-site temporal standard deviation values and how they were obtained.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List

import numpy as np

from ..core.errors import DomainError, ParityError


class Method(str, Enum):
    EXACT = "exact"
    EMPIRICAL = "empirical"
    RESONANCE = "resonance-oracle"
    ASYMPTOTIC = "asymptotic"
    SIGMA3_ALPHA = "sigma3-alpha"


@dataclass(frozen=True)
class SigmaProfile:
    size: int
    method: Method
    alpha: float
    values: np.ndarray = field(repr=False)
    steps: int | None = None

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64).reshape(-1)
        if values.shape[0] != self.size:
            raise DomainError(f"expected {self.size} sigma values, got {values.shape[0]}")
        if np.any(values < 0):
            raise DomainError("temporal standard deviations must be non-negative")
        method = Method(self.method)
        if method is Method.EXACT:
            if self.size % 2 == 0:
                raise ParityError("exact sigma profile", self.size)
            if self.alpha != 1.0:
                raise DomainError("exact sigma profile is only defined for alpha = 1")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "method", method)

    def records(self) -> List[dict]:
        return [
            {
                "N": self.size,
                "n": n,
                "method": self.method.value,
                "alpha": self.alpha,
                "T": self.steps,
                "sigma": float(value),
            }
            for n, value in enumerate(self.values)
        ]


def peak_sites(profile: SigmaProfile, tol: float = 1e-2) -> List[int]:
    """Sites whose sigma lies within `tol` of the profile maximum."""
    top = profile.values.max()
    return [int(n) for n in np.flatnonzero(profile.values >= top - tol)]


def top_sites(profile: SigmaProfile, count: int) -> List[int]:
    """The `count` sites with the largest sigma, largest first (ties by site)."""
    order = np.lexsort((np.arange(profile.size), -profile.values))
    return [int(n) for n in order[:count]]
