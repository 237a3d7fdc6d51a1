"""
module barground.commands.commandgradcheck

Contains all definitions for the CommandGradcheck class which handles
execution when the user runs 'barground gradcheck ...'
"""

from argparse import ArgumentParser
from typing import List

from .. import constants
from ..autodiff import ops
from ..tables import RecordSet
from ..verification import GradcheckResult, gradcheck_cases_by_name, run_gradchecks
from . import bargroundcommand
from .commandargumentparser import CommandArgumentParser
from .options import add_config_argument, apply_common_arguments

_command_gradcheck_arg_parser: ArgumentParser = CommandArgumentParser(
    "gradcheck",
    "Compare every backward() against central finite differences",
)
_command_gradcheck_arg_parser.add_argument(
    "--case",
    action="append",
    choices=list(gradcheck_cases_by_name),
    metavar="NAME",
    help="run only this case (repeatable)",
)
_command_gradcheck_arg_parser.add_argument(
    "--break-op",
    choices=sorted(ops.functions_by_name),
    metavar="OP",
    help="scale the gradients of OP to show that the checks catch it",
)
_command_gradcheck_arg_parser.add_argument("--seed", type=int, default=0)
_command_gradcheck_arg_parser.add_argument(
    "--tolerance", type=float, default=constants.GRADCHECK_TOLERANCE
)
_command_gradcheck_arg_parser.add_argument(
    "--step", type=float, default=constants.GRADCHECK_STEP, help="finite-difference step h"
)
add_config_argument(_command_gradcheck_arg_parser)


class CommandGradcheck(bargroundcommand.BarGroundCommand):
    """
    class CommandGradcheck

    Class that handles execution when the user runs 'barground gradcheck ...'
    """

    @property
    def argument_parser(self: "CommandGradcheck") -> ArgumentParser:
        return _command_gradcheck_arg_parser

    def execute(self: "CommandGradcheck") -> int:
        config = self.base_config(self.args.config)
        apply_common_arguments(config, self.args)
        self.parent.use_config(config)

        results: List[GradcheckResult] = run_gradchecks(
            names=self.args.case,
            seed=self.args.seed,
            step=self.args.step,
            tolerance=self.args.tolerance,
            broken_op=self.args.break_op,
        )
        self.display_record_set(
            RecordSet(
                columns=["case", "max relative error", "status"],
                records=[
                    (
                        result.name,
                        f"{result.max_relative_error:.3e}",
                        "ok" if result.passed else "FAILED",
                    )
                    for result in results
                ],
            )
        )

        display = self.parent.context.backends.display
        failed: List[str] = [result.name for result in results if not result.passed]
        if failed:
            display.display_message(
                f"Gradient check failed for {len(failed)} of {len(results)} cases: "
                + ", ".join(failed)
                + (
                    f" (broken backward() injected into '{self.args.break_op}')"
                    if self.args.break_op is not None
                    else ""
                )
            )
            return constants.EXIT_FAILURE

        display.display_message(
            f"All {len(results)} gradient checks passed "
            f"(max relative error {max(result.max_relative_error for result in results):.3e})"
        )
        return constants.EXIT_SUCCESS
