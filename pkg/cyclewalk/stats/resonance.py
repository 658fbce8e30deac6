"""
Temporal variance as a sum over resonant eigenvalue quadruples.

With eigen-indices a = 2j+k and pair weights

    W_ab = alpha_a conj(alpha_b) + beta_a conj(beta_b)

the fluctuation P(n, t) - 1/N is sum_{a != b} W_ab e^{i (theta_a - theta_b) t}.
Averaging its square over t keeps only quadruples (a, b, c, d), a != b and
c != d, whose phase difference theta_a - theta_b + theta_c - theta_d is
0 mod 2 pi. Resonances are detected numerically here, so the result is an
oracle that does not depend on the combinatorial rules in `rule_tuples`.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Set, Tuple

import numpy as np

from ..core.config import DEFAULT_ANGLE_TOLERANCE
from ..core.errors import DomainError, require_odd
from ..spectral.eigen import spectrum
from ..spectral.fourier import fourier_table
from ..walk.state import check_sites
from .closed_form import safe_sqrt
from .profile import Method, SigmaProfile

MAX_RESONANCE_SITES = 15

Quadruple = Tuple[int, int, int, int, int, int, int, int]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResonanceTerm:
    indices: Quadruple
    delta_theta: float
    weight: complex
    included: bool


def reduce_angle(angle):
    """Map angles into (-pi, pi]."""
    return math.pi - np.remainder(math.pi - np.asarray(angle), 2.0 * math.pi)


def _check(sites: int) -> int:
    sites = check_sites(sites)
    require_odd("resonance_sigma", sites)
    if sites > MAX_RESONANCE_SITES:
        raise DomainError(
            f"resonance enumeration is limited to N <= {MAX_RESONANCE_SITES} (got N={sites})"
        )
    return sites


def _pair_phases(sites: int) -> np.ndarray:
    theta = spectrum(sites).arguments
    return theta[:, None] - theta[None, :]


def _resonance_mask(sites: int, tol: float) -> np.ndarray:
    """Boolean (2N, 2N, 2N, 2N) array of resonant quadruples with a != b, c != d."""
    pair = _pair_phases(sites)
    delta = pair[:, :, None, None] + pair[None, None, :, :]
    mask = np.abs(reduce_angle(delta)) < tol
    distinct = ~np.eye(2 * sites, dtype=bool)
    return mask & distinct[:, :, None, None] & distinct[None, None, :, :]


def _pair_weights(sites: int, n: int) -> np.ndarray:
    alpha, beta = fourier_table(sites, n).flat()
    return np.outer(alpha, alpha.conj()) + np.outer(beta, beta.conj())


def _as_tuple(a: int, b: int, c: int, d: int) -> Quadruple:
    return (a // 2, a % 2, b // 2, b % 2, c // 2, c % 2, d // 2, d % 2)


def resonant_tuples(sites: int, tol: float = DEFAULT_ANGLE_TOLERANCE) -> Set[Quadruple]:
    sites = _check(sites)
    return {_as_tuple(*idx) for idx in zip(*np.nonzero(_resonance_mask(sites, tol)))}


def rule_tuples(sites: int) -> Set[Quadruple]:
    """
    Quadruples generated by the reflection rules. From each ordered pair
    (j0,k0) != (j1,k1): mirror both in the real axis; mirror both in the
    imaginary axis; point-reflect and swap; swap. On top of those, every
    pair of antipodal couples, (a, -a) with (c, -c), whose phases each
    differ by pi.
    """
    sites = check_sites(sites)
    out: Set[Quadruple] = set()
    modes = [(j, k) for j in range(sites) for k in (0, 1)]
    for j0, k0 in modes:
        for j1, k1 in modes:
            out.add((j0, k0, (-j0) % sites, 1 - k0, j1, k1, (-j1) % sites, 1 - k1))
            if (j0, k0) == (j1, k1):
                continue
            out.add((j0, k0, j1, k1, (-j0) % sites, k0, (-j1) % sites, k1))
            out.add((j0, k0, j1, k1, j0, 1 - k0, j1, 1 - k1))
            out.add((j0, k0, j1, k1, (-j1) % sites, 1 - k1, (-j0) % sites, 1 - k0))
            out.add((j0, k0, j1, k1, j1, k1, j0, k0))
    return out


def resonance_variance(sites: int, n: int, tol: float = DEFAULT_ANGLE_TOLERANCE) -> float:
    sites = _check(sites)
    weights = _pair_weights(sites, n)
    mask = _resonance_mask(sites, tol)
    products = weights[:, :, None, None] * weights[None, None, :, :]
    variance = float(np.sum(products.real, where=mask))
    logger.debug("Resonance sum N=%d n=%d over %d quadruples", sites, n, int(mask.sum()))
    return variance


def resonance_sigma(sites: int, n: int, angle_tolerance: float = DEFAULT_ANGLE_TOLERANCE) -> float:
    return safe_sqrt(resonance_variance(sites, n, angle_tolerance), f"N={sites}, n={n} (resonance)")


def resonance_terms(sites: int, n: int, tol: float = DEFAULT_ANGLE_TOLERANCE) -> List[ResonanceTerm]:
    """Every quadruple that survives time averaging, with its phase and weight."""
    sites = _check(sites)
    weights = _pair_weights(sites, n)
    pair = _pair_phases(sites)
    terms = []
    for a, b, c, d in zip(*np.nonzero(_resonance_mask(sites, tol))):
        terms.append(
            ResonanceTerm(
                indices=_as_tuple(a, b, c, d),
                delta_theta=float(reduce_angle(pair[a, b] + pair[c, d])),
                weight=complex(weights[a, b] * weights[c, d]),
                included=True,
            )
        )
    return terms


def resonance_profile(sites: int, tol: float = DEFAULT_ANGLE_TOLERANCE) -> SigmaProfile:
    sites = _check(sites)
    values = np.array([resonance_sigma(sites, n, tol) for n in range(sites)])
    return SigmaProfile(sites, Method.RESONANCE, 1.0, values)
