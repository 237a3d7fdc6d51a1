"""
module barground.entrypoint

Contains the definition of the main() method that is invoked when
barground is run from the command line
"""

from argparse import ArgumentParser, Namespace
import logging
import sys
from typing import List

from . import constants
from .barground import BarGround

_log_levels: List[str] = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def main(argv: List[str] | None = None) -> int:
    """
    Configures logging from a leading --log-level flag and runs the requested
    subcommand

    Args:
        argv (List[str] | None): The command line without the program name,
            sys.argv[1:] when None

    Returns:
        int: Exit code to return to be returned to the system

    Raises:
        Nothing
    """

    argv = sys.argv[1:] if argv is None else argv

    # only flags placed before the subcommand belong to the tool itself
    global_parser: ArgumentParser = ArgumentParser(
        prog=constants.APPLICATION_NAME, add_help=False
    )
    global_parser.add_argument(
        "--log-level", type=str.upper, choices=_log_levels, default="WARNING"
    )
    global_parser.add_argument(
        "--version", action="version", version=f"%(prog)s {constants.APPLICATION_VERSION}"
    )

    split_at: int = next(
        (
            position
            for position, argument in enumerate(argv)
            if not argument.startswith("-")
            and (position == 0 or argv[position - 1] != "--log-level")
        ),
        len(argv),
    )
    global_args: Namespace = global_parser.parse_args(argv[:split_at])

    logging.basicConfig(
        level=global_args.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    return BarGround().run(argv[split_at:])
