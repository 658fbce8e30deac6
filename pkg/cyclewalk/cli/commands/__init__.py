from __future__ import annotations

import logging
import sys

from .asymptote_cmd import add_asymptote
from .classical_cmd import add_classical
from .sigma_cmd import add_sigma
from .simulate_cmd import add_simulate
from .spectrum_cmd import add_spectrum
from .sweep_cmd import add_sweep_alpha

logger = logging.getLogger(__name__)

RED = "\033[1m\033[31m"
RESET = "\033[0m"


def register(subparsers):
    add_simulate(subparsers)
    add_sigma(subparsers)
    add_sweep_alpha(subparsers)
    add_spectrum(subparsers)
    add_asymptote(subparsers)
    add_classical(subparsers)


def diagnostic(text: str) -> str:
    """One error line, in bold red when stderr is a terminal."""
    if not sys.stderr.isatty():
        return text
    return f"{RED}{text}{RESET}"


def fail(message: str, code: int):
    logger.error(message)
    print(diagnostic(f"cyclewalk: {message}"), file=sys.stderr)
    raise SystemExit(code)


def dispatch(args, settings):
    if not hasattr(args, "func"):
        fail("no command provided", 2)
    try:
        args.func(args, settings)
    except OSError as exc:
        fail(str(exc), 1)
    except ValueError as exc:
        fail(str(exc), 2)
    except RuntimeError as exc:
        fail(f"internal error: {exc}", 3)
