"""
module barground.commands.commandtrace

Contains all definitions for the CommandTrace class which handles execution
when the user runs 'barground trace ...'
"""

from argparse import ArgumentParser
from typing import List

import numpy as np

from .. import constants
from ..corpus import GroundingSample, load_corpus
from ..extractor import Boundary
from ..inference import GroundingResult, export_trace, ground, temporal_iou
from ..planner import RolloutMode
from ..tables import RecordSet
from . import bargroundcommand
from .commandargumentparser import CommandArgumentParser
from .commandeval import evaluation_setup
from .exceptions import InvalidArgumentException
from .options import add_config_argument, add_inference_arguments, add_rollout_arguments

_command_trace_arg_parser: ArgumentParser = CommandArgumentParser(
    "trace", "Ground one query and write the boundary visited at every step"
)
_command_trace_arg_parser.add_argument("checkpoint", help="checkpoint written by train")
_command_trace_arg_parser.add_argument("corpus", help="corpus holding the query")
_command_trace_arg_parser.add_argument(
    "--index", type=int, default=0, metavar="I", help="position of the sample in the corpus"
)
_command_trace_arg_parser.add_argument(
    "--out", required=True, metavar="PATH", help="trace file to write (JSON lines)"
)
_command_trace_arg_parser.add_argument("--seed", type=int)
add_config_argument(_command_trace_arg_parser)
add_inference_arguments(_command_trace_arg_parser)
add_rollout_arguments(_command_trace_arg_parser)


def _score_text(score: float) -> str:
    return "n/a" if np.isnan(score) else f"{score:.4f}"


def _clips_text(boundary: Boundary) -> str:
    # human-readable output names the first and last clip, both included
    first, last = boundary.to_inclusive()
    return f"[{first}, {last}]"


class CommandTrace(bargroundcommand.BarGroundCommand):
    """
    class CommandTrace

    Class that handles execution when the user runs 'barground trace ...'
    """

    @property
    def argument_parser(self: "CommandTrace") -> ArgumentParser:
        return _command_trace_arg_parser

    def execute(self: "CommandTrace") -> int:
        model, config = evaluation_setup(self)
        samples: List[GroundingSample] = load_corpus(self.args.corpus)
        if not 0 <= self.args.index < len(samples):
            raise InvalidArgumentException(
                f"--index {self.args.index} is outside the corpus of {len(samples)} samples"
            )

        sample: GroundingSample = samples[self.args.index]
        seed: int = config.train.seed if self.args.seed is None else self.args.seed
        result: GroundingResult = ground(
            model,
            sample,
            config.inference,
            config.ablation,
            RolloutMode.GREEDY,
            np.random.default_rng([seed, self.args.index]),
        )
        export_trace(result, self.args.out)

        self.display_record_set(
            RecordSet(
                columns=["t", "clips", "action", "nu", "score", "penalized", "best"],
                records=[
                    (
                        candidate.step,
                        _clips_text(candidate.boundary),
                        "-" if candidate.action is None else candidate.action.name,
                        "-" if candidate.amplitude is None else candidate.amplitude,
                        _score_text(candidate.score),
                        _score_text(candidate.penalized_score),
                        "*" if index == result.best_index else "",
                    )
                    for index, candidate in enumerate(result.candidates)
                ],
            )
        )

        message: str = (
            f"{sample.video_id}: predicted clips {_clips_text(result.boundary)} of "
            f"{result.clip_count}, penalized score {_score_text(result.best_score)}"
        )
        if sample.gt_segment is not None:
            message += (
                f", ground truth clips {_clips_text(sample.gt_segment)} "
                f"(tIoU {temporal_iou(result.boundary, sample.gt_segment):.4f})"
            )
        display = self.parent.context.backends.display
        display.display_message(message)
        display.display_info(f"trace written to {self.args.out}")

        return constants.EXIT_SUCCESS
