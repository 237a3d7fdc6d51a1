"""
module barground.commands.commandtrain

Contains all definitions for the CommandTrain class which handles execution
when the user runs 'barground train ...'
"""

from argparse import ArgumentParser
from datetime import datetime
import logging
import os
from typing import List, Tuple

import numpy as np

from .. import constants
from ..autodiff import Checkpoint
from ..config import RunConfig
from ..config.exceptions import ConfigException
from ..corpus import GroundingSample, TrainingSample, load_corpus, split
from ..corpus.exceptions import CorpusValidationException
from ..model import GroundingModel, config_of
from ..trainer import Trainer, TrainingSummary
from ..trainer.exceptions import DivergenceException
from . import bargroundcommand
from .commandargumentparser import CommandArgumentParser
from .options import (
    add_config_argument,
    add_rollout_arguments,
    apply_common_arguments,
    apply_rollout_arguments,
)

logger = logging.getLogger(__name__)

_command_train_arg_parser: ArgumentParser = CommandArgumentParser(
    "train", "Train the grounding agent on a corpus with the alternating schedule"
)
_command_train_arg_parser.add_argument("corpus", help="training corpus (.bin or .jsonl)")
add_config_argument(_command_train_arg_parser)
_command_train_arg_parser.add_argument(
    "--run-dir",
    metavar="DIR",
    help=f"directory for the checkpoint, metrics log and config echo (default: ${constants.ENV_RUN_DIR} or a per-user data directory)",
)
_command_train_arg_parser.add_argument(
    "--resume", metavar="CHECKPOINT", help="continue a run from its checkpoint"
)
_command_train_arg_parser.add_argument(
    "--eval-corpus", metavar="PATH", help="labeled corpus evaluated every --eval-every iterations"
)
_command_train_arg_parser.add_argument(
    "--holdout",
    action="store_true",
    help="train on a train_fraction split of the corpus and evaluate on the rest",
)
_command_train_arg_parser.add_argument("--iterations", type=int, metavar="COUNT")
_command_train_arg_parser.add_argument("--seed", type=int)
_command_train_arg_parser.add_argument("--hidden-size", type=int, metavar="K")
_command_train_arg_parser.add_argument("--batch-size", type=int, metavar="B")
_command_train_arg_parser.add_argument(
    "--half-period", type=int, metavar="K", help="iterations per phase of the schedule"
)
_command_train_arg_parser.add_argument("--eval-every", type=int, metavar="COUNT")
_command_train_arg_parser.add_argument("--max-steps", type=int, metavar="T")
_command_train_arg_parser.add_argument("--lr", type=float)
_command_train_arg_parser.add_argument(
    "--joint-update",
    action="store_const",
    const=True,
    help="optimize the actor-critic and ranking losses together every iteration",
)
_command_train_arg_parser.add_argument(
    "--encoder-in-a2c",
    action="store_const",
    const=True,
    help="let the actor-critic loss update the query encoder",
)
_command_train_arg_parser.add_argument(
    "--no-progress", action="store_true", help="hide the progress bar"
)
add_rollout_arguments(_command_train_arg_parser)
_command_train_arg_parser.add_argument(
    "--no-context",
    action="store_const",
    const=True,
    help="leave the left and right segment features out of the planner state",
)
_command_train_arg_parser.add_argument(
    "--no-intra",
    action="store_const",
    const=True,
    help="drop the intra-video ranking loss",
)

_train_overrides = {
    "iterations": "total_iterations",
    "seed": "seed",
    "batch_size": "batch_size",
    "half_period": "half_period",
    "eval_every": "eval_every",
    "max_steps": "max_steps",
    "lr": "lr",
    "joint_update": "joint_update",
    "encoder_in_a2c": "encoder_in_a2c",
}


class CommandTrain(bargroundcommand.BarGroundCommand):
    """
    class CommandTrain

    Class that handles execution when the user runs 'barground train ...'
    """

    @property
    def argument_parser(self: "CommandTrain") -> ArgumentParser:
        return _command_train_arg_parser

    def _resolve_config(self: "CommandTrain", checkpoint: Checkpoint | None) -> RunConfig:
        # a resumed run starts from its own config echo
        if checkpoint is not None and self.args.config is None:
            config: RunConfig = config_of(checkpoint)
        else:
            config = self.base_config(self.args.config)

        apply_common_arguments(config, self.args)
        apply_rollout_arguments(config, self.args)
        for argument, field_name in _train_overrides.items():
            if (value := getattr(self.args, argument)) is not None:
                setattr(config.train, field_name, value)

        if self.args.hidden_size is not None:
            config.model.hidden_size = self.args.hidden_size
        if self.args.no_context is not None:
            config.ablation.no_context = True
        if self.args.no_intra is not None:
            config.ablation.no_intra = True

        config.resolve()
        return config

    def _run_dir(self: "CommandTrain") -> str:
        if self.args.run_dir is not None:
            return self.args.run_dir
        if self.args.resume is not None:
            return os.path.dirname(os.path.abspath(self.args.resume))

        return os.path.join(
            RunConfig.default_run_dir(), f"run-{datetime.now():%Y%m%d-%H%M%S}"
        )

    def _datasets(
        self: "CommandTrain", config: RunConfig, samples: List[GroundingSample]
    ) -> Tuple[List[GroundingSample], List[GroundingSample]]:
        if self.args.holdout:
            return split(samples, config.train.train_fraction, config.train.seed)

        if self.args.eval_corpus is not None:
            return samples, load_corpus(self.args.eval_corpus)

        return samples, []

    def execute(self: "CommandTrain") -> int:
        checkpoint: Checkpoint | None = (
            Checkpoint.load(self.args.resume) if self.args.resume is not None else None
        )
        config: RunConfig = self._resolve_config(checkpoint)

        samples: List[GroundingSample] = load_corpus(self.args.corpus)
        if not samples:
            raise CorpusValidationException(f"Corpus '{self.args.corpus}' holds no samples")
        config.model.feature_dim = samples[0].feature_dim
        highest_token: int = max(int(np.max(sample.query_tokens)) for sample in samples)
        if highest_token >= config.model.vocab_size:
            raise ConfigException(
                f"The corpus uses token id {highest_token} but model.vocab_size is "
                f"{config.model.vocab_size}"
            )
        config.validate()
        self.parent.use_config(config)

        run_dir: str = self._run_dir()
        try:
            os.makedirs(run_dir, exist_ok=True)
        except OSError as exc:
            raise ConfigException(f"Unable to create run directory '{run_dir}': {exc}") from exc
        config.to_file(os.path.join(run_dir, constants.CONFIG_FILE_NAME))

        train_samples, eval_samples = self._datasets(config, samples)
        rng: np.random.Generator = np.random.default_rng(config.train.seed)
        model: GroundingModel = GroundingModel(
            config.model, rng, no_context=config.ablation.no_context
        )
        trainer: Trainer = Trainer(
            config,
            model,
            [sample.training_view() for sample in train_samples],
            rng,
            run_dir,
            eval_samples=eval_samples,
            show_progress=not self.args.no_progress,
        )

        if checkpoint is not None:
            trainer.restore(checkpoint)
        else:
            trainer.metrics_log.reset()

        display = self.parent.context.backends.display
        display.display_info(
            f"training on {len(train_samples)} samples"
            + (f", evaluating on {len(eval_samples)}" if eval_samples else "")
            + f"; run directory {run_dir}"
        )

        try:
            summary: TrainingSummary = trainer.train()
        except DivergenceException as exc:
            display.display_info(f"diagnostic dump written to {exc.dump_path}")
            raise

        display.display_message(
            f"Trained {summary.iterations} iterations; checkpoint written to "
            f"{summary.checkpoint_path}"
        )
        if summary.last_record is not None:
            self.display_record_set(summary.last_record.to_record_set())

        return constants.EXIT_SUCCESS
