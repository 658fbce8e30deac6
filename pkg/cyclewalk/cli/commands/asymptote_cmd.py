from __future__ import annotations

import logging

from ...core.errors import require_odd
from ...stats.closed_form import asymptotic_sigma_origin, closed_form_sigma
from ..output import records_frame, write_table
from ..run_spec import RunSpec, add_run_flags

COLUMNS = ("N", "sigma_exact", "sigma_asymptotic", "rel_error")
REGIME_TOLERANCE = 0.05
DEFAULT_SITES = tuple(range(3, 22, 2))

logger = logging.getLogger(__name__)


def add_asymptote(subparsers):
    parser = subparsers.add_parser("asymptote", help="sigma_N(0) against its large-N expansion")
    add_run_flags(parser, sites=DEFAULT_SITES)
    parser.set_defaults(func=run_asymptote)


def run_asymptote(args, settings):
    spec = RunSpec.from_args(args, settings)
    for sites in spec.sites:
        require_odd("asymptote", sites)

    records = []
    for sites in spec.sites:
        exact = closed_form_sigma(sites, 0)
        approx = asymptotic_sigma_origin(sites)
        records.append(
            {
                "N": sites,
                "sigma_exact": exact,
                "sigma_asymptotic": approx,
                "rel_error": abs(exact - approx) / exact,
            }
        )
    outliers = sorted(r["N"] for r in records if r["rel_error"] > REGIME_TOLERANCE)
    trailer = [f"out-of-regime: {', '.join(f'N={n}' for n in outliers)}"] if outliers else []
    logger.info("asymptote over %d sizes, %d out of regime", len(records), len(outliers))
    write_table(records_frame(records, COLUMNS), spec, sort_by=["N"], trailer=trailer)
