"""
Expansion of the canonical start Psi(0) = (1, 0, ..., 0) in the eigenbasis.

For odd N the wave function at site n is a finite sum over eigenvalues:

    L(n, t) = sum_jk alpha_jk c_jk^t,    R(n, t) = sum_jk beta_jk c_jk^t

    alpha_jk = e^(2 pi i n j / N) / (2N) * (1 + (-1)^k cos xi_j / sqrt(1 + cos^2 xi_j))
    beta_jk  = (-1)^k e^(2 pi i (n-1) j / N) / (2N sqrt(1 + cos^2 xi_j))
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from ..core.errors import DomainError, require_odd
from ..walk.state import check_site, check_sites
from .eigen import check_mode, spectrum


@dataclass(frozen=True)
class FourierCoeffs:
    """Coefficient tables of shape (N, 2), indexed [j, k], for one site n."""

    size: int
    site: int
    alpha: np.ndarray = field(repr=False)
    beta: np.ndarray = field(repr=False)

    def weight(self) -> float:
        """sum |alpha|^2 + |beta|^2, the time-averaged probability at `site`."""
        return float(np.sum(np.abs(self.alpha) ** 2) + np.sum(np.abs(self.beta) ** 2))

    def flat(self) -> Tuple[np.ndarray, np.ndarray]:
        """Coefficients in spectrum order 2j+k."""
        return self.alpha.reshape(-1), self.beta.reshape(-1)


def _coefficients(sites: int, n: int, j, k) -> Tuple[np.ndarray, np.ndarray]:
    j = np.asarray(j)
    sign = np.where(np.asarray(k) == 0, 1.0, -1.0)
    xi = 2.0 * np.pi * j / sites
    root = np.sqrt(1.0 + np.cos(xi) ** 2)
    alpha = np.exp(2j * np.pi * ((n * j) % sites) / sites) / (2 * sites) * (1.0 + sign * np.cos(xi) / root)
    beta = sign * np.exp(2j * np.pi * (((n - 1) * j) % sites) / sites) / (2 * sites * root)
    return alpha, beta


def fourier_coefficients(sites: int, n: int, j: int, k: int) -> Tuple[complex, complex]:
    sites = check_mode(sites, j, k)
    require_odd("fourier_coefficients", sites)
    check_site(sites, n)
    alpha, beta = _coefficients(sites, n, j, k)
    return complex(alpha), complex(beta)


def fourier_table(sites: int, n: int) -> FourierCoeffs:
    sites = check_sites(sites)
    require_odd("fourier_table", sites)
    check_site(sites, n)
    j = np.repeat(np.arange(sites), 2).reshape(sites, 2)
    k = np.tile(np.array([0, 1]), (sites, 1))
    alpha, beta = _coefficients(sites, n, j, k)
    return FourierCoeffs(sites, n, alpha, beta)


def wavefunction_spectral(sites: int, n: int, t: int) -> Tuple[complex, complex]:
    """(L(n, t), R(n, t)) for the canonical start, rebuilt from the spectrum."""
    if t < 0:
        raise DomainError(f"time must be non-negative, got {t}")
    table = fourier_table(sites, n)
    alpha, beta = table.flat()
    phases = np.exp(1j * spectrum(table.size).arguments * t)
    return complex(np.sum(alpha * phases)), complex(np.sum(beta * phases))


def spectral_site_probability(sites: int, n: int, t: int) -> float:
    left, right = wavefunction_spectral(sites, n, t)
    return abs(left) ** 2 + abs(right) ** 2

