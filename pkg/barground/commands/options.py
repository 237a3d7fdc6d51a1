"""
module barground.commands.options

Contains the flags shared between commands and the functions that apply them
on top of a RunConfig. Every flag defaults to None so that only flags the user
actually passed override the configuration.
"""

from argparse import ArgumentParser, ArgumentTypeError, Namespace
from typing import List

from .. import constants
from ..config import FIXED_AMPLITUDE_CHOICES, InitBoundary, RunConfig, TableBackendType

FIXED_AMPLITUDE_OFF: str = "off"


def float_list(text: str) -> List[float]:
    """
    Parses a comma-separated list of numbers such as '0.3,0.5,0.7'
    """

    try:
        values: List[float] = [float(item) for item in text.split(",") if item.strip()]
    except ValueError as exc:
        raise ArgumentTypeError(f"'{text}' is not a comma-separated list of numbers") from exc

    if not values:
        raise ArgumentTypeError("expected at least one value")

    return values


def add_config_argument(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--config", metavar="PATH", help="JSON run configuration to start from"
    )
    parser.add_argument(
        "--table-backend",
        choices=[str(backend) for backend in TableBackendType],
        help="how result tables are rendered",
    )


def add_rollout_arguments(parser: ArgumentParser) -> None:
    """
    Flags of the ablation switches that change how an episode is rolled out.
    They apply to training and to grounding alike.
    """

    group = parser.add_argument_group("ablations")
    group.add_argument(
        "--fixed-amplitude",
        choices=[str(choice) for choice in FIXED_AMPLITUDE_CHOICES] + [FIXED_AMPLITUDE_OFF],
        help="shift by N/nu with a constant nu instead of the adaptive amplitude",
    )
    group.add_argument(
        "--random-reward",
        action="store_const",
        const=True,
        help="replace the sign reward by a fair coin flip",
    )
    group.add_argument(
        "--tie-reward",
        type=int,
        choices=[-1, 0],
        help="reward of a step that leaves the score unchanged",
    )
    group.add_argument(
        "--init-boundary",
        choices=[str(boundary) for boundary in InitBoundary],
        help="initial boundary, centered with this fraction cut from each side",
    )


def add_inference_arguments(parser: ArgumentParser) -> None:
    group = parser.add_argument_group("inference")
    group.add_argument(
        "--thresholds",
        type=float_list,
        metavar="CHI[,CHI...]",
        help=f"tIoU thresholds to report (default {','.join(map(str, constants.DEFAULT_THRESHOLDS))})",
    )
    group.add_argument(
        "--profile",
        choices=sorted(constants.PROFILE_PENALTY_BASELINES),
        help="corpus profile setting the penalty baseline delta",
    )
    group.add_argument("--penalty-baseline", type=float, metavar="DELTA")
    group.add_argument("--penalty-modulation", type=float, metavar="TAU")
    group.add_argument("--steps", type=int, metavar="T", help="refinement steps per query")
    group.add_argument(
        "--no-penalty",
        action="store_const",
        const=True,
        help="select the candidate with the highest unpenalized score",
    )
    group.add_argument(
        "--stop-threshold",
        type=float,
        metavar="S",
        help="stop refining once the current-segment score reaches S",
    )


def apply_common_arguments(config: RunConfig, args: Namespace) -> None:
    if args.table_backend is not None:
        config.table_backend = TableBackendType(args.table_backend)


def apply_rollout_arguments(config: RunConfig, args: Namespace) -> None:
    ablation = config.ablation

    if args.fixed_amplitude is not None:
        ablation.fixed_amplitude = (
            None if args.fixed_amplitude == FIXED_AMPLITUDE_OFF else int(args.fixed_amplitude)
        )
    if args.random_reward is not None:
        ablation.random_reward = True
    if args.tie_reward is not None:
        ablation.tie_reward = args.tie_reward
    if args.init_boundary is not None:
        ablation.init_boundary = InitBoundary(args.init_boundary)


def apply_inference_arguments(config: RunConfig, args: Namespace) -> None:
    inference = config.inference

    if args.thresholds is not None:
        inference.thresholds = list(args.thresholds)
    if args.profile is not None:
        inference.penalty_baseline = constants.PROFILE_PENALTY_BASELINES[args.profile]
    # an explicit delta wins over the profile
    if args.penalty_baseline is not None:
        inference.penalty_baseline = args.penalty_baseline
    if args.penalty_modulation is not None:
        inference.penalty_modulation = args.penalty_modulation
    if args.steps is not None:
        inference.max_steps = args.steps
    if args.no_penalty is not None:
        config.ablation.no_penalty = True
    if args.stop_threshold is not None:
        config.ablation.stop_threshold = args.stop_threshold
