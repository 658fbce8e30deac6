from __future__ import annotations

import logging

import numpy as np
import pandas as pd

from ...walk.state import WalkConfig, build_initial_state
from ...walk.trajectory import probability_blocks
from ..output import write_table
from ..run_spec import RunSpec, add_run_flags

COLUMNS = ("t", "n", "prob")

logger = logging.getLogger(__name__)


def add_simulate(subparsers):
    parser = subparsers.add_parser("simulate", help="Per-step site distributions")
    add_run_flags(parser)
    parser.set_defaults(func=run_simulate)


def run_simulate(args, settings):
    spec = RunSpec.from_args(args, settings)
    sites = spec.single_sites()
    steps = spec.single_steps()
    state = build_initial_state(WalkConfig(sites, spec.alpha))

    blocks = [probs for _, probs in probability_blocks(state, steps, spec.block_size)]
    probs = np.concatenate(blocks)
    frame = pd.DataFrame(
        {
            "t": np.repeat(np.arange(steps), sites),
            "n": np.tile(np.arange(sites), steps),
            "prob": probs.reshape(-1),
        },
        columns=list(COLUMNS),
    )
    if spec.site is not None:
        frame = frame[frame["n"] == spec.site]
    logger.info("simulate N=%d alpha=%.6f T=%d", sites, spec.alpha, steps)
    write_table(frame, spec, sort_by=["t", "n"])
