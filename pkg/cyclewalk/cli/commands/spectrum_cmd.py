from __future__ import annotations

import logging

import pandas as pd

from ...spectral.eigen import degenerate_pairs, max_residual, spectrum
from ..output import write_table
from ..run_spec import RunSpec, add_run_flags

COLUMNS = ("j", "k", "re", "im", "theta")

logger = logging.getLogger(__name__)


def add_spectrum(subparsers):
    parser = subparsers.add_parser("spectrum", help="Closed-form eigenvalues of the evolution matrix")
    add_run_flags(parser)
    parser.set_defaults(func=run_spectrum)


def run_spectrum(args, settings):
    spec = RunSpec.from_args(args, settings)
    sites = spec.single_sites()
    result = spectrum(sites)
    modes = result.modes()
    frame = pd.DataFrame(
        {
            "j": [j for j, _ in modes],
            "k": [k for _, k in modes],
            "re": result.eigenvalues.real,
            "im": result.eigenvalues.imag,
            "theta": result.arguments,
        },
        columns=list(COLUMNS),
    )
    trailer = [f"max_residual={max_residual(sites):.3e}"]
    pairs = degenerate_pairs(sites)
    if pairs:
        listed = "; ".join(f"({a[0]},{a[1]})=({b[0]},{b[1]})" for a, b in pairs)
        trailer.append(f"degenerate_pairs={len(pairs)}: {listed}")
    logger.info("spectrum N=%d with %d degenerate pairs", sites, len(pairs))
    write_table(frame, spec, sort_by=["j", "k"], trailer=trailer)
