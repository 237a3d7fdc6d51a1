"""
module barground.commands.commandeval

Contains all definitions for the CommandEval class which handles execution
when the user runs 'barground eval ...'
"""

from argparse import ArgumentParser
import os
from typing import List, Tuple

from .. import constants
from ..config import RunConfig
from ..corpus import GroundingSample, load_corpus
from ..inference import Baseline, EvaluationReport, evaluate
from ..inference.exceptions import TraceException
from ..model import GroundingModel, load_model
from . import bargroundcommand
from .commandargumentparser import CommandArgumentParser
from .options import (
    add_config_argument,
    add_inference_arguments,
    add_rollout_arguments,
    apply_common_arguments,
    apply_inference_arguments,
    apply_rollout_arguments,
)

_command_eval_arg_parser: ArgumentParser = CommandArgumentParser(
    "eval", "Ground every labeled query of a corpus and report tIoU@chi recall"
)
_command_eval_arg_parser.add_argument("checkpoint", help="checkpoint written by train")
_command_eval_arg_parser.add_argument("corpus", help="labeled test corpus (.bin or .jsonl)")
add_config_argument(_command_eval_arg_parser)
_command_eval_arg_parser.add_argument(
    "--baseline",
    choices=[str(baseline) for baseline in Baseline],
    help="evaluate a reference predictor instead of the trained policy",
)
_command_eval_arg_parser.add_argument(
    "--trace-dir", metavar="DIR", help="export one trace per query into DIR"
)
_command_eval_arg_parser.add_argument(
    "--workers", type=int, metavar="COUNT", help="grounding threads (default 1)"
)
_command_eval_arg_parser.add_argument(
    "--seed", type=int, help="seed of the random baseline and random rewards"
)
add_inference_arguments(_command_eval_arg_parser)
add_rollout_arguments(_command_eval_arg_parser)


def evaluation_setup(
    command: bargroundcommand.BarGroundCommand,
) -> Tuple[GroundingModel, RunConfig]:
    """
    Loads the checkpoint named by command.args and resolves the configuration
    to evaluate with: the checkpoint's config echo (or --config) with the
    command's flags on top. Shared by eval, trace and sweep.

    Raises:
        CheckpointException: If the checkpoint cannot be loaded
        ConfigException: If the resolved configuration is invalid
    """

    model, config = load_model(command.args.checkpoint)
    if command.args.config is not None:
        config = command.base_config(command.args.config)

    apply_common_arguments(config, command.args)
    apply_inference_arguments(config, command.args)
    apply_rollout_arguments(config, command.args)
    if getattr(command.args, "workers", None) is not None:
        config.workers = command.args.workers

    config.validate()
    command.parent.use_config(config)
    return model, config


class CommandEval(bargroundcommand.BarGroundCommand):
    """
    class CommandEval

    Class that handles execution when the user runs 'barground eval ...'
    """

    @property
    def argument_parser(self: "CommandEval") -> ArgumentParser:
        return _command_eval_arg_parser

    def execute(self: "CommandEval") -> int:
        model, config = evaluation_setup(self)
        samples: List[GroundingSample] = load_corpus(self.args.corpus)

        if self.args.trace_dir is not None:
            try:
                os.makedirs(self.args.trace_dir, exist_ok=True)
            except OSError as exc:
                raise TraceException(
                    f"Unable to create trace directory '{self.args.trace_dir}': {exc}"
                ) from exc

        report: EvaluationReport = evaluate(
            model,
            samples,
            config.inference,
            config.ablation,
            workers=config.workers,
            baseline=None if self.args.baseline is None else Baseline(self.args.baseline),
            seed=config.train.seed if self.args.seed is None else self.args.seed,
            trace_dir=self.args.trace_dir,
        )

        display = self.parent.context.backends.display
        display.display_message(
            f"Evaluated {report.evaluated} queries"
            + (f" ({self.args.baseline} baseline)" if self.args.baseline else "")
        )
        self.display_record_set(report.recall_record_set())
        self.display_record_set(report.summary_record_set())

        if self.args.trace_dir is not None:
            display.display_info(f"traces written to {self.args.trace_dir}")

        return constants.EXIT_SUCCESS
