import numpy as np
import pytest

from barground.autodiff import Tensor, eval_mode
from barground.autodiff.exceptions import ContractException
from barground.evaluator import AlignmentEvaluator, AlignmentScores, sign_reward
from barground.extractor import Boundary


@pytest.fixture
def evaluator() -> AlignmentEvaluator:
    return AlignmentEvaluator(feature_dim=5, hidden_size=4, dropout_rate=0.5, rng=np.random.default_rng(0))


@pytest.mark.parametrize(
    "current,previous,expected",
    [(0.62, 0.48, 1), (0.30, 0.55, -1), (0.40, 0.40, -1)],
)
def test_sign_reward(current, previous, expected) -> None:
    assert sign_reward(current, previous) == expected


def test_tie_reward_can_be_zero() -> None:
    assert sign_reward(0.40, 0.40, tie_reward=0) == 0


def test_sign_reward_is_antisymmetric() -> None:
    rng: np.random.Generator = np.random.default_rng(4)

    for current, previous in rng.uniform(-1.0, 1.0, size=(1000, 2)):
        assert sign_reward(current, previous) == -sign_reward(previous, current)
        assert sign_reward(current, previous) in (-1, 1)

    for score in rng.uniform(-1.0, 1.0, size=50):
        assert sign_reward(score, score, tie_reward=0) == -sign_reward(score, score, tie_reward=0)


def test_attention_weights_form_a_distribution(evaluator) -> None:
    rng: np.random.Generator = np.random.default_rng(1)

    with eval_mode():
        attention = evaluator.attend(Tensor(rng.normal(size=(7, 5))), Tensor(rng.normal(size=4)))

    assert attention.weights.shape == (7,)
    assert attention.weights.numpy().sum() == pytest.approx(1.0)
    assert np.all(attention.weights.numpy() >= 0.0)
    assert attention.attended.shape == (4,)


def test_attending_over_nothing_is_an_error(evaluator) -> None:
    with pytest.raises(ContractException):
        evaluator.attend(Tensor(np.zeros((0, 5))), Tensor(np.ones(4)))


def test_scores_are_cosines(evaluator) -> None:
    rng: np.random.Generator = np.random.default_rng(2)

    with eval_mode():
        score: float = evaluator.score(Tensor(rng.normal(size=(6, 5))), Tensor(rng.normal(size=4))).item()

    assert -1.0 <= score <= 1.0


def test_empty_segments_score_minus_one(evaluator) -> None:
    assert evaluator.score(Tensor(np.zeros((0, 5))), Tensor(np.ones(4))).item() == -1.0


def test_state_scores_cover_every_segment(evaluator) -> None:
    rng: np.random.Generator = np.random.default_rng(3)
    clips: Tensor = Tensor(rng.normal(size=(8, 5)))

    with eval_mode():
        scores: AlignmentScores = evaluator.score_state(clips, Boundary(0, 4), Tensor(rng.normal(size=4)))

    global_score, current, left, right = scores.as_floats()
    assert left == -1.0
    assert all(-1.0 <= value <= 1.0 for value in (global_score, current, right))


def test_eval_mode_scores_are_repeatable(evaluator) -> None:
    rng: np.random.Generator = np.random.default_rng(4)
    clips: Tensor = Tensor(rng.normal(size=(6, 5)))
    query: Tensor = Tensor(rng.normal(size=4))

    with eval_mode():
        first: float = evaluator.score(clips, query).item()
        second: float = evaluator.score(clips, query).item()

    assert first == second


def test_whole_video_boundary_scores_like_the_video(evaluator) -> None:
    rng: np.random.Generator = np.random.default_rng(5)
    clips: Tensor = Tensor(rng.normal(size=(9, 5)))

    with eval_mode():
        global_score, current, left, right = evaluator.score_state(
            clips, Boundary(0, 9), Tensor(rng.normal(size=4))
        ).as_floats()

    assert current == global_score
    assert left == right == -1.0
