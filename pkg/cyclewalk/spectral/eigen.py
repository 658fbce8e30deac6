"""
Closed-form eigenvalues and eigenvectors of the evolution matrix.

For j = 0..N-1 and k = 0, 1, with xi_j = 2 pi j / N:

    c_jk = ((-1)^k sqrt(1 + cos^2 xi_j) + i sin xi_j) / sqrt(2)

The eigenvector of c_jk has, for site m = 0..N-1 (phase label m+1),

    L_m = a_jk b_jk w^(j(m+1)),   R_m = a_jk w^(j(m+1)),   w = exp(2 pi i / N)

with b_jk = w^j ((-1)^k sqrt(1 + cos^2 xi_j) + cos xi_j) and
a_jk = 1 / sqrt(N (1 + |b_jk|^2)). The closed form counts vector elements
from 1, so element l (1-based, odd) is L of site (l+1)/2 - 1 and element l
(even) is R of site l/2 - 1; the phase exponent uses the 1-based site label.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Tuple

import numpy as np

from ..core.errors import DomainError
from ..walk.state import check_sites
from ..walk.unitary import cached_unitary

SQRT2 = math.sqrt(2.0)

logger = logging.getLogger(__name__)


def check_mode(sites: int, j: int, k: int) -> int:
    sites = check_sites(sites)
    if not 0 <= j < sites:
        raise DomainError(f"eigen index j={j} out of range 0..{sites - 1}")
    if k not in (0, 1):
        raise DomainError(f"eigen index k must be 0 or 1, got {k}")
    return sites


def _xi(sites: int, j: int) -> float:
    return 2.0 * math.pi * j / sites


def _root_unity(sites: int, power) -> np.ndarray:
    """w^power with the exponent reduced mod N before exponentiating."""
    return np.exp(2j * np.pi * (np.asarray(power) % sites) / sites)


@dataclass(frozen=True)
class EigenvectorParams:
    omega: complex
    xi: float
    b: complex
    a: float


@dataclass(frozen=True)
class Spectrum:
    """All 2N eigenpairs; entry 2j+k belongs to (j, k)."""

    size: int
    eigenvalues: np.ndarray = field(repr=False)
    arguments: np.ndarray = field(repr=False)
    eigenvectors: np.ndarray = field(repr=False)

    def modes(self) -> List[Tuple[int, int]]:
        return [(j, k) for j in range(self.size) for k in (0, 1)]


def eigenvalue(sites: int, j: int, k: int) -> complex:
    sites = check_mode(sites, j, k)
    xi = _xi(sites, j)
    real = (-1) ** k * math.sqrt(1.0 + math.cos(xi) ** 2)
    return complex(real, math.sin(xi)) / SQRT2


def eigenvector_params(sites: int, j: int, k: int) -> EigenvectorParams:
    sites = check_mode(sites, j, k)
    xi = _xi(sites, j)
    omega = complex(np.exp(2j * np.pi / sites))
    b = complex(_root_unity(sites, j)) * ((-1) ** k * math.sqrt(1.0 + math.cos(xi) ** 2) + math.cos(xi))
    a = 1.0 / math.sqrt(sites * (1.0 + abs(b) ** 2))
    return EigenvectorParams(omega=omega, xi=xi, b=b, a=a)


def eigenvector(sites: int, j: int, k: int) -> np.ndarray:
    params = eigenvector_params(sites, j, k)
    labels = np.arange(1, sites + 1)
    phases = _root_unity(sites, j * labels)
    vec = np.empty(2 * sites, dtype=np.complex128)
    vec[0::2] = params.a * params.b * phases
    vec[1::2] = params.a * phases
    return vec


def verify_eigenpair(sites: int, j: int, k: int) -> float:
    """||M v - c v||_2 for the closed-form pair (c_jk, v_jk)."""
    sites = check_mode(sites, j, k)
    vec = eigenvector(sites, j, k)
    residual = cached_unitary(sites) @ vec - eigenvalue(sites, j, k) * vec
    return float(np.linalg.norm(residual))


def spectrum(sites: int) -> Spectrum:
    sites = check_sites(sites)
    values = np.empty(2 * sites, dtype=np.complex128)
    vectors = np.empty((2 * sites, 2 * sites), dtype=np.complex128)
    for j in range(sites):
        for k in (0, 1):
            values[2 * j + k] = eigenvalue(sites, j, k)
            vectors[:, 2 * j + k] = eigenvector(sites, j, k)
    # atan2 branch: arguments in (-pi, pi]
    arguments = np.arctan2(values.imag, values.real)
    return Spectrum(sites, values, arguments, vectors)


def max_residual(sites: int) -> float:
    sites = check_sites(sites)
    worst = max(verify_eigenpair(sites, j, k) for j in range(sites) for k in (0, 1))
    logger.debug("Max eigenpair residual for N=%d: %.3e", sites, worst)
    return worst


def degenerate_pairs(sites: int, tol: float = 1e-9) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    result = spectrum(sites)
    pairs = []
    for (p, q) in combinations(range(2 * result.size), 2):
        if abs(result.eigenvalues[p] - result.eigenvalues[q]) < tol:
            pairs.append(((p // 2, p % 2), (q // 2, q % 2)))
    return pairs


def min_separation(sites: int) -> float:
    values = spectrum(sites).eigenvalues
    gaps = np.abs(values[:, None] - values[None, :])
    np.fill_diagonal(gaps, np.inf)
    return float(gaps.min())
