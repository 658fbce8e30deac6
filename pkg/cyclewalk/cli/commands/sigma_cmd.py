from __future__ import annotations

import logging

from ...core.errors import DomainError, require_odd
from ...stats.closed_form import exact_profile
from ...stats.empirical import empirical_profile
from ...stats.profile import SigmaProfile
from ...stats.resonance import MAX_RESONANCE_SITES, resonance_profile
from ...walk.state import WalkConfig
from ..output import records_frame, run_jobs, write_table
from ..run_spec import RunSpec, add_run_flags

COLUMNS = ("N", "n", "method", "alpha", "T", "sigma")

logger = logging.getLogger(__name__)


def add_sigma(subparsers):
    parser = subparsers.add_parser("sigma", help="Temporal standard deviation per site")
    add_run_flags(parser, method="exact")
    parser.set_defaults(func=run_sigma)


def validate(spec: RunSpec):
    if spec.method in ("exact", "resonance"):
        for sites in spec.sites:
            require_odd(f"sigma --method {spec.method}", sites)
        if spec.alpha != 1.0:
            raise DomainError(f"--method {spec.method} is only defined for the canonical start --alpha 1")
    if spec.method == "resonance":
        for sites in spec.sites:
            if sites > MAX_RESONANCE_SITES:
                raise DomainError(f"--method resonance is limited to N <= {MAX_RESONANCE_SITES}, got {sites}")
    if spec.method == "empirical":
        spec.single_steps()


def profile_for(spec: RunSpec, sites: int) -> SigmaProfile:
    if spec.method == "exact":
        return exact_profile(sites)
    if spec.method == "resonance":
        return resonance_profile(sites, spec.angle_tolerance)
    return empirical_profile(WalkConfig(sites, spec.alpha), spec.steps[0], block=spec.block_size)


def run_sigma(args, settings):
    spec = RunSpec.from_args(args, settings)
    validate(spec)
    profiles = run_jobs(lambda sites: profile_for(spec, sites), spec.sites, spec.workers)
    records = [row for profile in profiles for row in profile.records() if spec.keeps(row["n"])]
    logger.info("sigma method=%s N=%s", spec.method, ",".join(map(str, spec.sites)))
    write_table(records_frame(records, COLUMNS), spec, sort_by=["N", "n"])
