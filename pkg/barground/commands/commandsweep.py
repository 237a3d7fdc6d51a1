"""
module barground.commands.commandsweep

Contains all definitions for the CommandSweep class which handles execution
when the user runs 'barground sweep ...'
"""

from argparse import ArgumentParser
import dataclasses
from typing import List, Tuple

from .. import constants
from ..config import InferenceConfig
from ..corpus import GroundingSample, load_corpus
from ..inference import EvaluationReport, evaluate
from ..tables import RecordSet
from . import bargroundcommand
from .commandargumentparser import CommandArgumentParser
from .commandeval import evaluation_setup
from .options import add_config_argument, add_inference_arguments, add_rollout_arguments, float_list

_swept_fields = {
    "baseline": "penalty_baseline",
    "modulation": "penalty_modulation",
}

_command_sweep_arg_parser: ArgumentParser = CommandArgumentParser(
    "sweep",
    "Evaluate a checkpoint across a grid of penalty baselines (delta) or "
    "modulations (tau), holding the other parameter fixed",
)
_command_sweep_arg_parser.add_argument("checkpoint", help="checkpoint written by train")
_command_sweep_arg_parser.add_argument("corpus", help="labeled validation corpus")
_command_sweep_arg_parser.add_argument(
    "--parameter", choices=sorted(_swept_fields), default="baseline", help="parameter to sweep"
)
_command_sweep_arg_parser.add_argument(
    "--values", type=float_list, required=True, metavar="V[,V...]", help="grid of values"
)
_command_sweep_arg_parser.add_argument("--workers", type=int, metavar="COUNT")
_command_sweep_arg_parser.add_argument("--seed", type=int)
add_config_argument(_command_sweep_arg_parser)
add_inference_arguments(_command_sweep_arg_parser)
add_rollout_arguments(_command_sweep_arg_parser)


class CommandSweep(bargroundcommand.BarGroundCommand):
    """
    class CommandSweep

    Class that handles execution when the user runs 'barground sweep ...'
    """

    @property
    def argument_parser(self: "CommandSweep") -> ArgumentParser:
        return _command_sweep_arg_parser

    def execute(self: "CommandSweep") -> int:
        model, config = evaluation_setup(self)
        samples: List[GroundingSample] = load_corpus(self.args.corpus)
        field_name: str = _swept_fields[self.args.parameter]
        seed: int = config.train.seed if self.args.seed is None else self.args.seed

        # every point is validated before the first evaluation runs
        grid: List[Tuple[float, InferenceConfig]] = []
        for value in self.args.values:
            point: InferenceConfig = dataclasses.replace(config.inference, **{field_name: value})
            point.validate()
            grid.append((value, point))

        records: List[Tuple] = []
        thresholds: List[str] = []
        for value, point in grid:
            report: EvaluationReport = evaluate(
                model,
                samples,
                point,
                config.ablation,
                workers=config.workers,
                seed=seed,
            )
            thresholds = list(report.recall)
            records.append(
                (
                    f"{value:g}",
                    *(f"{100.0 * recall:.2f}%" for recall in report.recall.values()),
                    f"{report.mean_iou:.4f}",
                )
            )

        self.parent.context.backends.display.display_message(
            f"Swept {field_name} over {len(grid)} values on {len(samples)} samples"
        )
        self.display_record_set(
            RecordSet(
                columns=[
                    field_name,
                    *(f"tIoU@{threshold}" for threshold in thresholds),
                    "mean tIoU",
                ],
                records=records,
            )
        )

        return constants.EXIT_SUCCESS
