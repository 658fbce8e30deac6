"""
Entry point for the cyclewalk CLI.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

# Support running both as `python -m cyclewalk.cli.main` and via direct path execution.
if __package__ is None or __package__ == "":
    project_root = Path(__file__).resolve().parents[2]
    sys.path.insert(0, str(project_root))
    from cyclewalk.core.config import load_settings
    from cyclewalk.core.logging_utils import setup_logging
    from cyclewalk.cli import commands
else:
    from ..core.config import load_settings
    from ..core.logging_utils import setup_logging
    from ..cli import commands


class Parser(argparse.ArgumentParser):
    """Reports usage errors as a single diagnostic line."""

    def error(self, message):
        print(commands.diagnostic(f"{self.prog}: {message}"), file=sys.stderr)
        raise SystemExit(2)


def main(argv=None):
    parser = Parser(prog="cyclewalk")
    parser.add_argument("--log-level", default=None, help="Override the configured log level")
    subparsers = parser.add_subparsers(dest="command")
    commands.register(subparsers)
    args = parser.parse_args(argv)
    settings = load_settings()
    try:
        setup_logging(settings, args.log_level)
    except ValueError as exc:
        parser.error(str(exc))
    commands.dispatch(args, settings)


if __name__ == "__main__":
    main()
