from __future__ import annotations

import logging
from typing import List, Tuple

import numpy as np

from ...core.errors import DomainError
from ...stats.closed_form import sigma3_profile
from ...stats.empirical import empirical_profile
from ...walk.state import WalkConfig
from ..output import records_frame, run_jobs, write_table
from ..run_spec import RunSpec, add_run_flags

COLUMNS = ("N", "n", "alpha", "sigma")

logger = logging.getLogger(__name__)


def add_sweep_alpha(subparsers):
    parser = subparsers.add_parser(
        "sweep-alpha",
        help="Sigma against the initial-state parameter (exact for N=3 unless --method empirical)",
    )
    add_run_flags(parser, sites=(3,))
    parser.set_defaults(func=run_sweep_alpha)


def _sweep_point(spec: RunSpec, job: Tuple[int, float]) -> List[dict]:
    sites, alpha = job
    if sites == 3 and spec.method != "empirical":
        profile = sigma3_profile(alpha)
    else:
        profile = empirical_profile(WalkConfig(sites, alpha), spec.steps[0], block=spec.block_size)
    return [
        {"N": sites, "n": n, "alpha": alpha, "sigma": float(value)}
        for n, value in enumerate(profile.values)
        if spec.keeps(n)
    ]


def run_sweep_alpha(args, settings):
    spec = RunSpec.from_args(args, settings)
    if spec.method in ("exact", "resonance") and any(sites != 3 for sites in spec.sites):
        raise DomainError(f"sweep-alpha --method {spec.method} is only available for N=3")
    spec.single_steps()
    grid = np.linspace(0.0, 1.0, spec.points)
    jobs = [(sites, float(alpha)) for sites in spec.sites for alpha in grid]
    rows = run_jobs(lambda job: _sweep_point(spec, job), jobs, spec.workers)
    records = [row for chunk in rows for row in chunk]
    logger.info("sweep-alpha N=%s over %d points", ",".join(map(str, spec.sites)), spec.points)
    write_table(records_frame(records, COLUMNS), spec, sort_by=["N", "n", "alpha"])
