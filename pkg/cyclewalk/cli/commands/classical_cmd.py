from __future__ import annotations

import logging
from typing import List, Tuple

from ...classical.chain import classical_profile
from ...stats.empirical import default_mean, empirical_profile
from ...walk.state import WalkConfig
from ..output import records_frame, run_jobs, write_table
from ..run_spec import RunSpec, add_run_flags

COLUMNS = ("N", "n", "T", "sigma_classical", "sigma_quantum")
DEFAULT_STEPS = (1_000, 10_000, 100_000)

logger = logging.getLogger(__name__)


def add_classical(subparsers):
    parser = subparsers.add_parser("classical", help="Classical against quantum finite-T sigma")
    add_run_flags(parser, sites=(5,), steps=DEFAULT_STEPS)
    parser.set_defaults(func=run_classical)


def _compare(spec: RunSpec, job: Tuple[int, int]) -> List[dict]:
    sites, steps = job
    mean = default_mean(sites)
    classical = classical_profile(sites, steps, spec.block_size)
    quantum = empirical_profile(WalkConfig(sites, spec.alpha), steps, mean=mean, block=spec.block_size).values
    return [
        {
            "N": sites,
            "n": n,
            "T": steps,
            "sigma_classical": float(classical[n]),
            "sigma_quantum": float(quantum[n]),
        }
        for n in range(sites)
        if spec.keeps(n)
    ]


def run_classical(args, settings):
    spec = RunSpec.from_args(args, settings)
    jobs = [(sites, steps) for sites in spec.sites for steps in spec.steps]
    rows = run_jobs(lambda job: _compare(spec, job), jobs, spec.workers)
    records = [row for chunk in rows for row in chunk]
    logger.info("classical N=%s T=%s", ",".join(map(str, spec.sites)), ",".join(map(str, spec.steps)))
    write_table(records_frame(records, COLUMNS), spec, sort_by=["N", "n", "T"])
