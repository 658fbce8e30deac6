"""
Closed-form temporal standard deviations for the canonical start.

With theta_j = 4 pi j / N (not the xi_j = 2 pi j / N of the spectrum):

    S0     = sum_{j>=0} 1 / (3 + cos theta_j)
    S1     = sum_{j>=0} cos theta_j / (3 + cos theta_j)
    S+(n)  = sum_{j>=0} (cos((n-1) theta_j) + cos(n theta_j)) / (3 + cos theta_j)
    S-(n)  = sum_{j>=0} (cos((n-1) theta_j) - cos(n theta_j)) / (3 + cos theta_j)
    S2(n)  = sum_{j>=1} (7 + cos 2theta_j + 8 cos theta_j cos^2((n - 1/2) theta_j))
                        / (3 + cos theta_j)^2

and for odd N

    sigma_N(n)^2 = (2 (S+^2 + S-^2) + 11 S0^2 + 10 S0 S1 + 3 S1^2 - S2) / N^4 - 2 / N^3
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from ..core.errors import ConsistencyError, DomainError, require_odd
from ..walk.state import check_site, check_sites
from .profile import Method, SigmaProfile

RADICAND_TOLERANCE = 1e-12
SQRT2 = math.sqrt(2.0)
ASYMPTOTIC_LEADING = 13.0 - 8.0 * SQRT2
ASYMPTOTIC_CUBIC = (7.0 * SQRT2 - 16.0) / 2.0

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrigSums:
    s0: float
    s1: float
    s_plus: float
    s_minus: float
    s2: float
    theta: np.ndarray = field(repr=False)


def safe_sqrt(radicand: float, what: str) -> float:
    if radicand < -RADICAND_TOLERANCE:
        raise ConsistencyError(f"negative variance {radicand!r} for {what}")
    return math.sqrt(max(radicand, 0.0))


def theta_grid(sites: int) -> np.ndarray:
    return 4.0 * np.pi * np.arange(sites) / sites


def trig_sums(sites: int, n: int) -> TrigSums:
    sites = check_sites(sites)
    require_odd("trig_sums", sites)
    check_site(sites, n)
    theta = theta_grid(sites)
    cos = np.cos(theta)
    denom = 3.0 + cos
    shifted = np.cos((n - 1) * theta)
    here = np.cos(n * theta)
    tail = theta[1:]
    tail_cos = cos[1:]
    s2_terms = (7.0 + np.cos(2.0 * tail) + 8.0 * tail_cos * np.cos((n - 0.5) * tail) ** 2) / denom[1:] ** 2
    theta.setflags(write=False)
    return TrigSums(
        s0=float(np.sum(1.0 / denom)),
        s1=float(np.sum(cos / denom)),
        s_plus=float(np.sum((shifted + here) / denom)),
        s_minus=float(np.sum((shifted - here) / denom)),
        s2=float(np.sum(s2_terms)),
        theta=theta,
    )


def closed_form_variance(sites: int, n: int) -> float:
    sums = trig_sums(sites, n)
    bracket = (
        2.0 * (sums.s_plus**2 + sums.s_minus**2)
        + 11.0 * sums.s0**2
        + 10.0 * sums.s0 * sums.s1
        + 3.0 * sums.s1**2
        - sums.s2
    )
    return bracket / sites**4 - 2.0 / sites**3


def closed_form_sigma(sites: int, n: int) -> float:
    return safe_sqrt(closed_form_variance(sites, n), f"N={sites}, n={n}")


def sigma_origin(sites: int) -> float:
    """sigma_N(0) through its single-sum form, independent of trig_sums."""
    sites = check_sites(sites)
    require_odd("sigma_origin", sites)
    theta = theta_grid(sites)
    cos = np.cos(theta)
    denom = 3.0 + cos
    cubic = np.sum(7.0 * cos / denom) - 2.0
    product = np.sum(1.0 / denom) * np.sum((15.0 - 11.0 * cos) / denom)
    tail = (9.0 + 4.0 * cos[1:] + 3.0 * np.cos(2.0 * theta[1:])) / denom[1:] ** 2
    radicand = cubic / sites**3 + (product - np.sum(tail)) / sites**4
    return safe_sqrt(float(radicand), f"N={sites}, n=0")


def asymptotic_sigma_origin(sites: int) -> float:
    sites = check_sites(sites)
    require_odd("asymptotic_sigma_origin", sites)
    radicand = ASYMPTOTIC_LEADING / sites**2 + ASYMPTOTIC_CUBIC / sites**3
    if radicand < 0:
        raise DomainError(f"asymptotic variance is negative for N={sites}")
    return math.sqrt(radicand)


def relative_error(sites: int) -> float:
    exact = closed_form_sigma(sites, 0)
    return abs(exact - asymptotic_sigma_origin(sites)) / exact


def riemann_limits(sites: int) -> Dict[str, Tuple[float, float]]:
    """Normalised sums over theta_j and the integrals they converge to."""
    theta = theta_grid(check_sites(sites))
    cos = np.cos(theta)
    denom = 3.0 + cos
    return {
        "inverse": (float(np.mean(1.0 / denom)), 1.0 / (2.0 * SQRT2)),
        "cosine": (float(np.mean(cos / denom)), 1.0 - 3.0 / (2.0 * SQRT2)),
        "inverse_square": (float(np.mean(1.0 / denom**2)), 3.0 / (16.0 * SQRT2)),
        "cosine_over_square": (float(np.mean(cos / denom**2)), -1.0 / (16.0 * SQRT2)),
        "double_angle_over_square": (float(np.mean(np.cos(2.0 * theta) / denom**2)), 2.0 - 45.0 / (16.0 * SQRT2)),
    }


def sigma3_alpha(n: int, alpha: float) -> float:
    """N = 3 with |L,0,0> = alpha and |R,0,0> = i sqrt(1 - alpha^2)."""
    if n not in (0, 1, 2):
        raise DomainError(f"site index {n} out of range 0..2")
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    a2 = alpha * alpha
    if n == 0:
        return 2.0 * math.sqrt(46.0) / 45.0
    if n == 1:
        return 2.0 / 45.0 * math.sqrt(96.0 * a2 * a2 - 75.0 * a2 + 25.0)
    return 2.0 / 45.0 * math.sqrt(96.0 * a2 * a2 - 117.0 * a2 + 46.0)


def alpha_minimiser(n: int, points: int = 10_001) -> float:
    """Grid location in [0, 1] of the smallest sigma_3(n, alpha)."""
    if points < 2:
        raise DomainError(f"need at least two grid points, got {points}")
    grid = np.linspace(0.0, 1.0, points)
    values = np.array([sigma3_alpha(n, a) for a in grid])
    return float(grid[int(np.argmin(values))])


def exact_profile(sites: int) -> SigmaProfile:
    sites = check_sites(sites)
    require_odd("exact sigma", sites)
    values = [closed_form_sigma(sites, n) for n in range(sites)]
    logger.debug("Closed-form profile for N=%d: max %.6f", sites, max(values))
    return SigmaProfile(sites, Method.EXACT, 1.0, np.array(values))


def sigma3_profile(alpha: float) -> SigmaProfile:
    return SigmaProfile(3, Method.SIGMA3_ALPHA, alpha, np.array([sigma3_alpha(n, alpha) for n in range(3)]))
