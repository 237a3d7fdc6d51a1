from typing import List, Tuple

import numpy as np
import pytest

from barground.autodiff import Tensor, no_grad, train_mode
from barground.autodiff.exceptions import ContractException
from barground.config import RunConfig
from barground.config.exceptions import ConfigException
from barground.evaluator import AlignmentScores
from barground.model import GroundingModel
from barground.planner import RolloutMode, Trajectory, rollout
from barground.trainer import (
    MetricsLog,
    MetricsRecord,
    Trainer,
    TrainingPhase,
    a2c_loss,
    inter_loss,
    intra_loss,
    q_returns,
    rank_loss,
)


def _scores(global_score, current, left, right) -> AlignmentScores:
    return AlignmentScores(
        global_score=Tensor(global_score),
        current=Tensor(current),
        left=Tensor(left),
        right=Tensor(right),
    )


def _brute_force_inter(scores: np.ndarray, margin: float) -> float:
    size: int = scores.shape[0]
    total: float = 0.0
    for i in range(size):
        for j in range(size):
            if i != j:
                total += max(0.0, margin + scores[i, j] - scores[i, i])
                total += max(0.0, margin + scores[j, i] - scores[i, i])
    return total / size


def _brute_force_intra(values: List[float], global_score: float, margin: float) -> float:
    total: float = 0.0
    for x, anchor in enumerate(values):
        if anchor > global_score:
            total += sum(max(0.0, margin + other - anchor) for y, other in enumerate(values) if y != x)
    return total


def _model_and_trainer(
    config: RunConfig, samples, run_dir, seed: int | None = None
) -> Tuple[GroundingModel, Trainer]:
    rng: np.random.Generator = np.random.default_rng(config.train.seed if seed is None else seed)
    model: GroundingModel = GroundingModel(config.model, rng)
    trainer: Trainer = Trainer(
        config,
        model,
        [sample.training_view() for sample in samples],
        rng,
        str(run_dir),
        show_progress=False,
    )
    return model, trainer


def _trainer(config: RunConfig, samples, run_dir, seed: int | None = None) -> Trainer:
    return _model_and_trainer(config, samples, run_dir, seed)[1]


def test_returns_of_constant_rewards() -> None:
    returns: np.ndarray = q_returns(np.ones(3), np.zeros(3), 0.4)

    assert returns == pytest.approx([1.56, 1.4, 1.0])


def test_returns_match_the_discounted_sum() -> None:
    rng: np.random.Generator = np.random.default_rng(0)

    for _ in range(200):
        length: int = int(rng.integers(1, 13))
        rewards: np.ndarray = rng.choice([-1.0, 1.0], size=length)
        discount: float = float(rng.uniform())
        expected: List[float] = [
            sum(discount**offset * rewards[step + offset] for offset in range(length - step))
            for step in range(length)
        ]

        assert q_returns(rewards, rng.normal(size=length), discount) == pytest.approx(expected, abs=1e-12)


def test_inter_loss_of_a_perfect_batch_is_zero() -> None:
    assert inter_loss(Tensor(np.eye(4)), 0.2).item() == 0.0


def test_inter_loss_of_indistinguishable_pairs() -> None:
    assert inter_loss(Tensor(np.full((4, 4), 0.3)), 0.2).item() == pytest.approx(2 * 3 * 0.2)


def test_inter_loss_matches_brute_force() -> None:
    rng: np.random.Generator = np.random.default_rng(1)

    for _ in range(200):
        size: int = int(rng.integers(2, 6))
        scores: np.ndarray = rng.uniform(-1.0, 1.0, size=(size, size))

        assert inter_loss(Tensor(scores), 0.2).item() == pytest.approx(
            _brute_force_inter(scores, 0.2), abs=1e-12
        )


def test_inter_loss_needs_two_pairs() -> None:
    with pytest.raises(ConfigException):
        inter_loss(Tensor(np.ones((1, 1))), 0.2)


def test_intra_loss_with_satisfied_margins() -> None:
    assert intra_loss(_scores(0.1, 0.4, -0.4, -0.4), 0.2).item() == 0.0


def test_intra_loss_without_active_indicators() -> None:
    assert intra_loss(_scores(0.5, 0.5, 0.2, -1.0), 0.2).item() == 0.0


def test_intra_loss_matches_brute_force() -> None:
    rng: np.random.Generator = np.random.default_rng(2)

    for _ in range(500):
        global_score, current, left, right = rng.uniform(-1.0, 1.0, size=4)

        assert intra_loss(_scores(global_score, current, left, right), 0.2).item() == pytest.approx(
            _brute_force_intra([current, left, right], global_score, 0.2), abs=1e-12
        )


def test_rank_loss_without_intra_weight_is_the_inter_loss() -> None:
    inter: Tensor = inter_loss(Tensor(np.full((3, 3), 0.1)), 0.2)

    assert rank_loss(inter, [Tensor(1.0)], 0.0, 3) is inter
    assert rank_loss(inter, [Tensor(1.5), Tensor(1.5)], 0.1, 3).item() == pytest.approx(inter.item() + 0.1)


def test_a2c_loss_reaches_the_planner(model, corpus) -> None:
    sample = corpus[0].training_view()
    query: Tensor = model.encode(sample.query_tokens).detach()

    with train_mode():
        trajectory: Trajectory = rollout(
            model.evaluator, model.planner, sample, query, RolloutMode.SAMPLE, 3, np.random.default_rng(0)
        )
        loss: Tensor = a2c_loss(trajectory, entropy_weight=0.1, discount=0.4)
    loss.backward()

    assert np.isfinite(loss.item())
    assert model.planner.actor.weight.grad is not None
    assert model.planner.critic.weight.grad is not None
    assert model.evaluator.theta.fc.weight.grad is None


def test_a2c_loss_needs_policy_outputs(model, corpus) -> None:
    sample = corpus[0].training_view()

    with no_grad():
        trajectory: Trajectory = rollout(
            model.evaluator,
            model.planner,
            sample,
            model.encode(sample.query_tokens),
            RolloutMode.RANDOM,
            2,
            np.random.default_rng(0),
        )

    with pytest.raises(ContractException):
        a2c_loss(trajectory, 0.1, 0.4)


def test_phases_alternate_every_half_period() -> None:
    phases: List[TrainingPhase] = [TrainingPhase.for_iteration(it, 2) for it in range(6)]

    assert phases == [TrainingPhase.RANK] * 2 + [TrainingPhase.A2C] * 2 + [TrainingPhase.RANK] * 2
    assert TrainingPhase.for_iteration(3, 2, joint_update=True) == TrainingPhase.JOINT


def test_trainer_needs_a_full_batch(run_config, corpus, tmp_path) -> None:
    run_config.train.batch_size = len(corpus) + 1

    with pytest.raises(ConfigException):
        _trainer(run_config, corpus, tmp_path)


def test_each_phase_freezes_the_other_group(run_config, corpus, tmp_path) -> None:
    model, trainer = _model_and_trainer(run_config, corpus, tmp_path)
    planner_before: dict = model.planner.state_dict()
    extractor_before: dict = {**model.extractor.state_dict(), **model.evaluator.state_dict()}

    record: MetricsRecord = trainer.train_iteration()

    assert record.phase == TrainingPhase.RANK
    assert record.inter_loss is not None and record.a2c_loss is None
    for name, value in model.planner.state_dict().items():
        assert np.array_equal(value, planner_before[name])

    rank_after: dict = {**model.extractor.state_dict(), **model.evaluator.state_dict()}
    assert any(not np.array_equal(rank_after[name], value) for name, value in extractor_before.items())

    record = trainer.train_iteration()

    assert record.phase == TrainingPhase.A2C
    assert record.mean_reward is not None
    for name, value in {**model.extractor.state_dict(), **model.evaluator.state_dict()}.items():
        assert np.array_equal(value, rank_after[name])


def test_training_writes_a_checkpoint_and_one_record_per_iteration(run_config, corpus, tmp_path) -> None:
    summary = _trainer(run_config, corpus, tmp_path).train()

    assert summary.iterations == run_config.train.total_iterations
    assert (tmp_path / "checkpoint.npz").exists()

    records: List[MetricsRecord] = MetricsLog(str(tmp_path / "metrics.jsonl")).read()
    assert [record.iteration for record in records] == list(range(run_config.train.total_iterations))
    assert all(np.isfinite(record.loss) for record in records)


def test_resume_reproduces_the_run_bitwise(run_config, corpus, tmp_path) -> None:
    straight: Trainer = _trainer(run_config, corpus, tmp_path / "straight")
    expected: List[MetricsRecord] = [straight.train_iteration() for _ in range(4)]

    first: Trainer = _trainer(run_config, corpus, tmp_path / "first")
    first.train_iteration()
    first.train_iteration()
    checkpoint = first.checkpoint()

    # a different seed proves that every piece of state comes from the checkpoint
    resumed: Trainer = _trainer(run_config, corpus, tmp_path / "first", seed=99)
    resumed.restore(checkpoint)
    replayed: List[MetricsRecord] = [resumed.train_iteration() for _ in range(2)]

    assert resumed.iteration == 4
    assert [record.loss for record in replayed] == [record.loss for record in expected[2:]]
    assert [record.grad_norm for record in replayed] == [record.grad_norm for record in expected[2:]]


def test_evaluation_during_training_is_logged(run_config, corpus, tmp_path) -> None:
    run_config.train.eval_every = 2
    rng: np.random.Generator = np.random.default_rng(run_config.train.seed)
    trainer: Trainer = Trainer(
        run_config,
        GroundingModel(run_config.model, rng),
        [sample.training_view() for sample in corpus],
        rng,
        str(tmp_path),
        eval_samples=corpus[:3],
        show_progress=False,
    )

    trainer.train()
    records: List[MetricsRecord] = trainer.metrics_log.read()

    assert records[0].eval_tiou is None
    assert set(records[1].eval_tiou) == {"0.3", "0.5", "0.7"}
    assert 0.0 <= records[3].eval_mean_tiou <= 1.0


def test_metrics_log_reset(tmp_path) -> None:
    log: MetricsLog = MetricsLog(str(tmp_path / "metrics.jsonl"))
    log.append(MetricsRecord(iteration=0, phase=TrainingPhase.RANK, loss=1.0, grad_norm=0.5))

    assert len(log.read()) == 1

    log.reset()
    assert log.read() == []


def test_inter_loss_falls_over_one_schedule_cycle(run_config, corpus, tmp_path) -> None:
    # a full batch without dropout or intra terms keeps the rank objective fixed
    run_config.model.dropout_rate = 0.0
    run_config.train.batch_size = len(corpus)
    run_config.train.intra_weight = 0.0
    run_config.train.half_period = 25
    run_config.train.lr = 0.01
    trainer: Trainer = _trainer(run_config, corpus, tmp_path)

    records: List[MetricsRecord] = [
        trainer.train_iteration() for _ in range(2 * run_config.train.half_period)
    ]
    rank_losses: List[float] = [
        record.inter_loss for record in records if record.phase == TrainingPhase.RANK
    ]

    assert len(rank_losses) == run_config.train.half_period
    assert rank_losses[0] > 0.0
    assert rank_losses[-1] < rank_losses[0]
    assert all(record.a2c_loss is not None for record in records[run_config.train.half_period :])
