"""
module barground.trainer.trainer

Contains the definition of the Trainer class, the alternating optimization
loop: K iterations of ranking-loss updates to the extractor and evaluator,
then K iterations of actor-critic updates to the planner, repeated
"""

import json
import logging
import math
import os
from typing import Dict, List, Tuple

import numpy as np
from tqdm import tqdm

from .. import constants
from ..autodiff import Adam, Checkpoint, Tensor, no_grad, ops, train_mode
from ..autodiff.exceptions import CheckpointException
from ..config import RunConfig
from ..config.exceptions import ConfigException
from ..corpus import GroundingSample, TrainingSample
from ..evaluator import AlignmentScores
from ..extractor import SegmentPartition
from ..inference import evaluate
from ..model import GroundingModel
from ..planner import RolloutMode, Trajectory, rollout
from .dataclasses import MetricsRecord, TrainingSummary
from .enums import TrainingPhase
from .exceptions import DivergenceException
from .losses import a2c_loss, intra_loss, inter_loss, rank_loss
from .metricslog import MetricsLog

logger = logging.getLogger(__name__)


class Trainer:
    """
    class Trainer

    Runs the training schedule of a GroundingModel. Each phase has its own Adam
    optimizer that only ever writes its own parameter group, so parameters
    outside the group stay bitwise identical for the whole phase. One generator
    drives batch selection, action sampling and dropout, which makes a run
    reproducible from its seed and resumable from a checkpoint.
    """

    __config: RunConfig
    __model: GroundingModel
    __samples: List[TrainingSample]
    __eval_samples: List[GroundingSample]
    __rng: np.random.Generator
    __run_dir: str
    __optimizers: Dict[TrainingPhase, Adam]
    __metrics_log: MetricsLog
    __show_progress: bool
    iteration: int

    def __init__(
        self: "Trainer",
        config: RunConfig,
        model: GroundingModel,
        samples: List[TrainingSample],
        rng: np.random.Generator,
        run_dir: str,
        eval_samples: List[GroundingSample] | None = None,
        show_progress: bool = True,
    ) -> None:
        if len(samples) < config.train.batch_size:
            raise ConfigException(
                f"The training split holds {len(samples)} samples, fewer than the "
                f"batch size {config.train.batch_size}"
            )

        self.__config = config
        self.__model = model
        self.__samples = samples
        self.__eval_samples = eval_samples or []
        self.__rng = rng
        self.__run_dir = run_dir
        self.__show_progress = show_progress
        self.__metrics_log = MetricsLog(os.path.join(run_dir, constants.METRICS_FILE_NAME))
        self.iteration = 0

        train = config.train
        groups: Dict[TrainingPhase, List] = {
            TrainingPhase.RANK: model.rank_parameters(),
            TrainingPhase.A2C: model.a2c_parameters(train.encoder_in_a2c),
            TrainingPhase.JOINT: model.parameters(),
        }
        self.__optimizers = {
            phase: Adam(
                parameters,
                lr=train.lr,
                betas=(train.adam_beta1, train.adam_beta2),
                eps=train.adam_eps,
                grad_clip=train.grad_clip,
            )
            for phase, parameters in groups.items()
        }

    @property
    def metrics_log(self: "Trainer") -> MetricsLog:
        return self.__metrics_log

    def phase_for(self: "Trainer", iteration: int) -> TrainingPhase:
        return TrainingPhase.for_iteration(
            iteration, self.__config.train.half_period, self.__config.train.joint_update
        )

    def __draw_batch(self: "Trainer") -> List[TrainingSample]:
        indices: np.ndarray = self.__rng.choice(
            len(self.__samples), size=self.__config.train.batch_size, replace=False
        )
        return [self.__samples[int(index)] for index in indices]

    def __rank_loss(self: "Trainer", batch: List[TrainingSample]) -> Tuple[Tensor, float, float]:
        model: GroundingModel = self.__model
        train = self.__config.train
        clips: List[Tensor] = [Tensor(sample.clip_features) for sample in batch]
        queries: List[Tensor] = [model.encode(sample.query_tokens) for sample in batch]

        score_rows: List[List[Tensor]] = [
            [model.evaluator.score(video, query) for query in queries] for video in clips
        ]
        inter: Tensor = inter_loss(
            ops.stack([ops.stack(row) for row in score_rows]), train.margin
        )

        intra_terms: List[Tensor] = []
        if train.intra_weight > 0.0:
            for index, sample in enumerate(batch):
                with no_grad():
                    trajectory: Trajectory = rollout(
                        model.evaluator,
                        model.planner,
                        sample,
                        queries[index].detach(),
                        RolloutMode.SAMPLE,
                        train.max_steps,
                        self.__rng,
                        self.__config.ablation,
                    )

                for boundary in trajectory.boundaries[1:]:
                    parts: SegmentPartition = SegmentPartition.of(clips[index], boundary)
                    scores: AlignmentScores = AlignmentScores(
                        global_score=score_rows[index][index],
                        current=model.evaluator.score(parts.current, queries[index]),
                        left=model.evaluator.score(parts.left, queries[index]),
                        right=model.evaluator.score(parts.right, queries[index]),
                    )
                    intra_terms.append(intra_loss(scores, train.margin))

        loss: Tensor = rank_loss(inter, intra_terms, train.intra_weight, len(batch))
        intra_total: float = sum(term.item() for term in intra_terms) / len(batch)
        return loss, inter.item(), intra_total

    def __a2c_loss(self: "Trainer", batch: List[TrainingSample]) -> Tuple[Tensor, float]:
        model: GroundingModel = self.__model
        train = self.__config.train
        losses: List[Tensor] = []
        rewards: List[float] = []

        for sample in batch:
            query: Tensor = model.encode(sample.query_tokens)
            if not train.encoder_in_a2c:
                query = query.detach()

            trajectory: Trajectory = rollout(
                model.evaluator,
                model.planner,
                sample,
                query,
                RolloutMode.SAMPLE,
                train.max_steps,
                self.__rng,
                self.__config.ablation,
            )
            losses.append(a2c_loss(trajectory, train.entropy_weight, train.discount))
            rewards.extend(trajectory.rewards.tolist())

        return ops.sum_all(ops.stack(losses)) / len(batch), float(np.mean(rewards))

    def train_iteration(self: "Trainer") -> MetricsRecord:
        """
        Runs one iteration of the schedule: draws a batch, computes the loss of
        the current phase and updates that phase's parameter group

        Args:
            None

        Returns:
            MetricsRecord: The losses of the iteration

        Raises:
            DivergenceException: If a loss term is not finite. The diagnostic
                dump is written to the run directory first.
        """

        phase: TrainingPhase = self.phase_for(self.iteration)
        batch: List[TrainingSample] = self.__draw_batch()
        record: MetricsRecord = MetricsRecord(
            iteration=self.iteration, phase=phase, loss=math.nan, grad_norm=0.0
        )

        try:
            with train_mode():
                match phase:
                    case TrainingPhase.RANK:
                        loss, record.inter_loss, record.intra_loss = self.__rank_loss(batch)
                    case TrainingPhase.A2C:
                        loss, record.mean_reward = self.__a2c_loss(batch)
                        record.a2c_loss = loss.item()
                    case TrainingPhase.JOINT:
                        ranking, record.inter_loss, record.intra_loss = self.__rank_loss(batch)
                        actor_critic, record.mean_reward = self.__a2c_loss(batch)
                        record.a2c_loss = actor_critic.item()
                        loss = actor_critic + ranking * self.__config.train.rank_weight

            record.loss = loss.item()
            if not math.isfinite(record.loss):
                raise DivergenceException(f"{phase} loss is not finite")
        except DivergenceException as exc:
            exc.dump_path = self.__dump_divergence(record, exc)
            raise

        self.__model.zero_grad()
        loss.backward()
        record.grad_norm = self.__optimizers[phase].step()
        self.__model.zero_grad()

        self.iteration += 1
        return record

    def __dump_divergence(self: "Trainer", record: MetricsRecord, exc: DivergenceException) -> str:
        path: str = os.path.join(self.__run_dir, constants.DIVERGENCE_FILE_NAME)
        dump: Dict = {
            "iteration": record.iteration,
            "phase": str(record.phase),
            "step": exc.step,
            "message": str(exc),
            "partial_record": json.loads(record.to_json()),
            "parameter_norms": {
                name: float(np.linalg.norm(parameter.data))
                for name, parameter in self.__model.named_parameters()
            },
        }

        try:
            with open(path, "w", encoding="utf-8") as dump_file:
                json.dump(dump, dump_file, indent=2)
        except OSError as dump_exc:
            logger.error("unable to write divergence dump '%s': %s", path, dump_exc)

        logger.error("training diverged at iteration %d; dump written to %s", record.iteration, path)
        return path

    def __evaluate_into(self: "Trainer", record: MetricsRecord) -> None:
        report = evaluate(
            self.__model,
            self.__eval_samples,
            self.__config.inference,
            self.__config.ablation,
            seed=self.__config.train.seed,
        )
        record.eval_tiou = dict(report.recall)
        record.eval_mean_tiou = report.mean_iou

    def train(self: "Trainer", total_iterations: int | None = None) -> TrainingSummary:
        """
        Trains until total_iterations iterations have run (counting iterations
        restored from a checkpoint), logging every iteration and writing the
        final checkpoint to the run directory

        Args:
            total_iterations (int | None): Stopping point, defaults to the
                configured total_iterations

        Returns:
            TrainingSummary: Iterations run, checkpoint path and last record

        Raises:
            DivergenceException: If a loss becomes NaN or infinite
        """

        total: int = (
            self.__config.train.total_iterations if total_iterations is None else total_iterations
        )
        eval_every: int = self.__config.train.eval_every
        last_record: MetricsRecord | None = None
        previous_phase: TrainingPhase | None = None

        progress_bar: tqdm = tqdm(
            total=total,
            initial=self.iteration,
            desc="train",
            unit="it",
            dynamic_ncols=True,
            leave=True,
            disable=not self.__show_progress,
        )
        try:
            while self.iteration < total:
                phase: TrainingPhase = self.phase_for(self.iteration)
                if phase != previous_phase:
                    logger.info("iteration %d: entering %s phase", self.iteration, phase)
                    previous_phase = phase

                last_record = self.train_iteration()
                if eval_every > 0 and self.iteration % eval_every == 0 and self.__eval_samples:
                    self.__evaluate_into(last_record)

                self.__metrics_log.append(last_record)
                progress_bar.set_postfix(phase=str(phase), loss=f"{last_record.loss:.4f}")
                progress_bar.update(1)
        finally:
            progress_bar.close()

        checkpoint_path: str = os.path.join(self.__run_dir, constants.CHECKPOINT_FILE_NAME)
        self.checkpoint().save(checkpoint_path)
        return TrainingSummary(
            iterations=self.iteration, checkpoint_path=checkpoint_path, last_record=last_record
        )

    def checkpoint(self: "Trainer") -> Checkpoint:
        return Checkpoint(
            parameters=self.__model.state_dict(),
            optimizer_states={
                str(phase): optimizer.state_dict() for phase, optimizer in self.__optimizers.items()
            },
            metadata={
                "config": self.__config.to_json(),
                "iteration": str(self.iteration),
                "rng_state": json.dumps(self.__rng.bit_generator.state),
            },
        )

    def restore(self: "Trainer", checkpoint: Checkpoint) -> None:
        """
        Restores parameters, optimizer moments, the iteration counter and the
        generator state from a checkpoint written by this class

        Args:
            checkpoint (Checkpoint): A training checkpoint

        Returns:
            Nothing

        Raises:
            CheckpointException: If the checkpoint lacks training state or does
                not match the model
        """

        for key in ("iteration", "rng_state"):
            if key not in checkpoint.metadata:
                raise CheckpointException(f"Checkpoint has no '{key}' and cannot be resumed")

        self.__model.load_state_dict(checkpoint.parameters)
        for phase, optimizer in self.__optimizers.items():
            if str(phase) not in checkpoint.optimizer_states:
                raise CheckpointException(f"Checkpoint has no optimizer state for {phase}")
            optimizer.load_state_dict(checkpoint.optimizer_states[str(phase)])

        self.iteration = int(checkpoint.metadata["iteration"])
        self.__rng.bit_generator.state = json.loads(checkpoint.metadata["rng_state"])
        logger.info("resumed training at iteration %d", self.iteration)
