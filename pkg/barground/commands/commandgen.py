"""
module barground.commands.commandgen

Contains all definitions for the CommandGen class which handles execution
when the user runs 'barground gen ...'
"""

from argparse import ArgumentParser
from typing import List

from .. import constants
from ..config import RunConfig
from ..corpus import GroundingSample, SelfCheckReport, generate_synthetic, planted_recall, save_corpus
from . import bargroundcommand
from .commandargumentparser import CommandArgumentParser
from .options import add_config_argument, apply_common_arguments

_command_gen_arg_parser: ArgumentParser = CommandArgumentParser(
    "gen", "Generate a seeded synthetic corpus with one planted segment per query"
)
_command_gen_arg_parser.add_argument(
    "--out", required=True, metavar="PATH", help="corpus file to write (.bin or .jsonl)"
)
add_config_argument(_command_gen_arg_parser)
_command_gen_arg_parser.add_argument("--seed", type=int)
_command_gen_arg_parser.add_argument("--samples", type=int, metavar="COUNT")
_command_gen_arg_parser.add_argument("--clips-min", type=int, metavar="N")
_command_gen_arg_parser.add_argument("--clips-max", type=int, metavar="N")
_command_gen_arg_parser.add_argument("--feature-dim", type=int, metavar="D")
_command_gen_arg_parser.add_argument("--vocab-size", type=int, metavar="V")
_command_gen_arg_parser.add_argument("--query-min", type=int, metavar="L")
_command_gen_arg_parser.add_argument("--query-max", type=int, metavar="L")
_command_gen_arg_parser.add_argument("--segment-min", type=float, metavar="RHO")
_command_gen_arg_parser.add_argument("--segment-max", type=float, metavar="RHO")
_command_gen_arg_parser.add_argument("--snr", type=float, help="signal-to-noise norm ratio")
_command_gen_arg_parser.add_argument(
    "--no-self-check", action="store_true", help="skip the planted-segment recall check"
)

_corpus_overrides = {
    "seed": "seed",
    "samples": "num_samples",
    "clips_min": "clip_count_min",
    "clips_max": "clip_count_max",
    "feature_dim": "feature_dim",
    "vocab_size": "vocab_size",
    "query_min": "query_length_min",
    "query_max": "query_length_max",
    "segment_min": "segment_fraction_min",
    "segment_max": "segment_fraction_max",
    "snr": "signal_to_noise",
}


class CommandGen(bargroundcommand.BarGroundCommand):
    """
    class CommandGen

    Class that handles execution when the user runs 'barground gen ...'
    """

    @property
    def argument_parser(self: "CommandGen") -> ArgumentParser:
        return _command_gen_arg_parser

    def execute(self: "CommandGen") -> int:
        config: RunConfig = self.base_config(self.args.config)
        apply_common_arguments(config, self.args)
        for argument, field_name in _corpus_overrides.items():
            if (value := getattr(self.args, argument)) is not None:
                setattr(config.corpus, field_name, value)

        config.corpus.validate()
        self.parent.use_config(config)

        samples: List[GroundingSample] = generate_synthetic(config.corpus)
        save_corpus(samples, self.args.out)
        self.parent.context.backends.display.display_message(
            f"Wrote {len(samples)} samples to {self.args.out}"
        )

        if not self.args.no_self_check:
            report: SelfCheckReport = planted_recall(samples, config.corpus.seed)
            self.parent.context.backends.display.display_info(
                f"planted-segment self-check: {report.separated_clips}/{report.total_clips} "
                f"clips separated ({100.0 * report.fraction:.2f}%)"
            )

        return constants.EXIT_SUCCESS
