"""
grk command line
Argument parsing and the run() entry point used by main.py.
"""

import argparse
import asyncio
import sys
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from cli.commands import COMMANDS
from cli.manager import EXIT_OK, EXIT_USAGE, MOVE_ACTIONS, GrkManager, JobSpec
from core.errors import UsageError
from utils.config import get_settings
from utils.logger import setup_logger


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grk",
        description="Graphenes, virtual links and their invariants",
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="subcommand to run")
    parser.add_argument("args", nargs="*", help="input files ('-' for stdin, '@NAME' for a fixture); "
                                                "for 'moves' the first argument is the action")
    parser.add_argument("--limit", type=int, help="size guard for state sums, homology and enumeration")
    parser.add_argument("--budget", type=int, help="node budget for move searches")
    parser.add_argument("--depth", type=int, help="depth budget for move searches")
    parser.add_argument("--prime", type=int, default=3, help="odd prime for Fox colorings")
    parser.add_argument("--format", choices=("text", "kv"), default="text", help="output format")
    parser.add_argument("--seed", type=int, default=0, help="seed for random move walks")
    parser.add_argument("--orientation", default="auto",
                        help="auto | natural | enumerate | comma-separated cycle keys to reverse")
    parser.add_argument("--method", choices=("brute", "expansion"), default="brute",
                        help="Tait count method")
    parser.add_argument("--step", action="append", default=[], dest="steps",
                        help="move as '<MOVE> @ <site>' (repeatable)")
    parser.add_argument("--steps", type=int, default=4, dest="walk_steps", help="length of a random walk")
    parser.add_argument("--index", type=int, help="multicycle index for strong-embed")
    parser.add_argument("--workers", type=int, help="concurrent jobs in batch mode")
    parser.add_argument("--log-level", help="console log level")
    return parser


def _spec(ns: argparse.Namespace) -> JobSpec:
    args = list(ns.args)
    action = None
    if ns.command == "moves":
        if not args or args[0] not in MOVE_ACTIONS:
            raise ValueError(f"moves needs an action: {', '.join(MOVE_ACTIONS)}")
        action = args.pop(0)
    return JobSpec(
        command=ns.command,
        inputs=args,
        action=action,
        limit=ns.limit,
        budget=ns.budget,
        depth=ns.depth,
        prime=ns.prime,
        format=ns.format,
        seed=ns.seed,
        orientation=ns.orientation,
        method=ns.method,
        steps=ns.steps,
        walk_steps=ns.walk_steps,
        index=ns.index,
        workers=ns.workers or get_settings().workers,
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Parse, validate, run and print; returns the process exit status."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    settings = get_settings()
    setup_logger(level=ns.log_level or settings.log_level, log_dir=settings.log_dir,
                 file_logging=settings.log_file)

    try:
        spec = _spec(ns)
    except (ValidationError, ValueError) as exc:
        logger.error(f"❌ invalid options: {exc}")
        return EXIT_USAGE

    manager = GrkManager(spec)
    try:
        results = asyncio.run(manager.run_batch())
    except UsageError as exc:
        logger.error(f"❌ {exc}")
        return EXIT_USAGE

    printed = [r for r in results if r.output is not None]
    for k, result in enumerate(printed):
        if len(results) > 1 and spec.format == "text":
            sys.stdout.write(f"==> {result.label} <==\n")
        if result.output:
            sys.stdout.write(result.output + "\n")
        if spec.format == "kv" and k + 1 < len(printed):
            sys.stdout.write("\n")
    sys.stdout.flush()

    status = manager.status()
    if status["failed"]:
        logger.warning(f"⚠️ {status['failed']} of {status['jobs']} jobs failed")
    return manager.exit_code() if results else EXIT_OK
