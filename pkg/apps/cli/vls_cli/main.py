"""vls-bench entry point.

Usage:
    vls-bench cluster --data points.csv --clusters 4 --sample-size 500
    vls-bench bench --clusters 5 --algo bigoptima --sample-range 200:800
    vls-bench verify --instances 20
"""

import sys
from pathlib import Path

# Project root is 4 levels up from this file
_project_root = Path(__file__).parent.parent.parent.parent

from dotenv import load_dotenv
load_dotenv(_project_root / ".env", override=True)

# Add packages and app directories to Python path (must be before other imports)
for _path in (_project_root / "packages", _project_root / "apps" / "cli"):
    if str(_path) not in sys.path:
        sys.path.insert(0, str(_path))

import argparse

from core.observability import configure_logging
from core.settings import get_settings
from vls_cli.commands import COMMANDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vls-bench",
        description="Big-means clustering under variable landscape search",
    )
    parser.add_argument("--log-level", default=None, help="Logging level (default: VLS_LOG_LEVEL)")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level or get_settings().log_level)
    return args.handler(args, args.command_parser)


if __name__ == "__main__":
    sys.exit(main())
