"""Command-line entry point for blobalg."""

import argparse
import json
import logging
import os
import sys

from blobalg.commands import COMMANDS
from blobalg.commands.command_decorator import get_schema
from blobalg.core.config import RunConfig
from blobalg.core.constants import (
    ALGEBRA_KINDS,
    DEFAULT_L,
    DEFAULT_M,
    DEFAULT_N,
    DEFAULT_WORKERS,
    ENV_GOLDEN_DIR,
    ENV_LOG_LEVEL,
    ENV_WORKERS,
    FIELD_KINDS,
    OUTPUT_FORMATS,
)
from blobalg.core.exceptions import AlgebraError, BlobAlgebraError
from blobalg.core.reports import CommandResult, RunReport


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blobalg", description="Exact computations in TL_n(q) and b_n(m)"
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    for name, func in sorted(COMMANDS.items()):
        sub = subparsers.add_parser(name, help=get_schema(func)["description"].split("\n")[0])
        sub.add_argument("--algebra", choices=ALGEBRA_KINDS, default="blob", help="Algebra kind")
        sub.add_argument("--n", type=int, default=DEFAULT_N, help="Number of strands")
        sub.add_argument("--l", type=int, default=DEFAULT_L, help="Order of the root of unity")
        sub.add_argument("--m", type=int, default=DEFAULT_M, help="Blob parameter")
        sub.add_argument("--field", choices=FIELD_KINDS, default="cyclo", help="Scalar field")
        sub.add_argument(
            "--format", dest="output_format", choices=OUTPUT_FORMATS, default="text"
        )
        sub.add_argument(
            "--workers",
            type=int,
            default=int(os.getenv(ENV_WORKERS, DEFAULT_WORKERS)),
            help="Worker threads for verification",
        )
        sub.add_argument(
            "--golden-dir",
            default=os.getenv(ENV_GOLDEN_DIR),
            help="Directory holding the golden files",
        )
        sub.add_argument("--update", action="store_true", help="Rewrite golden anchors")
        sub.add_argument("--k", type=int, default=None, help="JM index for jm-matrix")
        sub.add_argument("--shape", default=None, help="Shape selector 'a,b'")
        sub.add_argument("--config", default=None, help="JSON file with a run configuration")
        sub.add_argument(
            "--log-level",
            choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
            default=os.getenv(ENV_LOG_LEVEL, "WARNING"),
            help="Set the logging level",
        )
    return parser


def render(config: RunConfig, result: CommandResult) -> str:
    """Text, CSV or the JSON envelope for a command result."""
    if config.output_format == "json":
        envelope = RunReport(config=config.to_dict(), results=result.results(), passed=result.passed)
        return json.dumps(envelope.to_dict(), indent=2)
    if config.output_format == "csv" and result.csv is not None:
        return result.csv.rstrip("\n")
    return result.text


def _error_output(config: RunConfig | None, error: BlobAlgebraError) -> str:
    payload = (
        error.to_dict()
        if isinstance(error, AlgebraError)
        else {"error_type": "CONFIGURATION_ERROR", "message": str(error), "details": {}}
    )
    if config is not None and config.output_format == "json":
        envelope = RunReport(config=config.to_dict(), results=[payload], passed=False)
        return json.dumps(envelope.to_dict(), indent=2)
    return json.dumps(payload)


def run(config: RunConfig) -> tuple[int, str]:
    """Dispatch a configuration to its subcommand.

    Args:
        config: Validated run configuration

    Returns:
        Exit status (0 all checks pass, 1 a check failed, 2 error) and the output
    """
    func = COMMANDS.get(config.subcommand)
    if func is None:
        return EXIT_ERROR, json.dumps(
            {"error_type": "CONFIGURATION_ERROR", "message": f"Unknown command {config.subcommand}"}
        )
    try:
        result = func(config)
    except BlobAlgebraError as e:
        logger.error("%s failed: %s", config.subcommand, e)
        return EXIT_ERROR, _error_output(config, e)
    status = EXIT_OK if result.passed else EXIT_FAILED
    return status, render(config, result)


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    # Configure logging
    logging.basicConfig(level=getattr(logging, args.log_level))

    options = {
        "algebra": args.algebra,
        "n": args.n,
        "l": args.l,
        "m": args.m,
        "field": args.field,
        "subcommand": args.subcommand,
        "output_format": args.output_format,
        "workers": args.workers,
        "golden_dir": args.golden_dir,
        "update": args.update,
        "k": args.k,
        "shape": args.shape,
    }
    try:
        if args.config:
            stored = RunConfig.load(args.config).to_dict()
            stored.update(subcommand=args.subcommand)
            config = RunConfig(**stored)
        else:
            config = RunConfig(**options)
    except BlobAlgebraError as e:
        print(_error_output(None, e), file=sys.stderr)
        return EXIT_ERROR

    status, output = run(config)
    print(output, file=sys.stdout if status != EXIT_ERROR else sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
