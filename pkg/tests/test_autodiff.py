import numpy as np
import pytest

from barground.autodiff import (
    Adam,
    Checkpoint,
    GRUCell,
    Linear,
    Parameter,
    Tensor,
    check_gradients,
    eval_mode,
    is_grad_enabled,
    is_training,
    no_grad,
    ops,
    relative_error,
    train_mode,
)
from barground.autodiff.exceptions import CheckpointException, ContractException, DimensionException


def test_softmax_is_stable_for_large_logits() -> None:
    probs: np.ndarray = ops.softmax(Tensor([1000.0, 0.0])).numpy()

    assert np.all(np.isfinite(probs))
    assert probs == pytest.approx([1.0, 0.0])


def test_log_softmax_matches_log_of_softmax() -> None:
    logits: Tensor = Tensor([0.5, -1.0, 2.0, 0.0])

    assert ops.log_softmax(logits).numpy() == pytest.approx(
        np.log(ops.softmax(logits).numpy())
    )


def test_l2_normalize_scales_to_unit_length() -> None:
    assert ops.l2_normalize(Tensor([3.0, 4.0])).numpy() == pytest.approx([0.6, 0.8])


def test_l2_normalize_of_the_zero_vector() -> None:
    zero: Tensor = Tensor(np.zeros(3), requires_grad=True)

    normalized: Tensor = ops.l2_normalize(zero)
    ops.sum_all(normalized * Tensor([1.0, -2.0, 0.5])).backward()

    assert np.array_equal(normalized.numpy(), np.zeros(3))
    assert np.array_equal(zero.grad, np.zeros(3))


@pytest.mark.parametrize(
    "analytic,numeric,expected",
    [([1.0], [0.9], 0.1), ([0.9], [1.0], 0.1), ([3.0, 4.0], [3.0, 4.0], 0.0), ([0.0], [0.0], 0.0)],
)
def test_relative_error_scales_by_the_larger_norm(analytic, numeric, expected) -> None:
    assert relative_error(np.array(analytic), np.array(numeric)) == pytest.approx(expected)


def test_mean_pool_averages_rows() -> None:
    assert ops.mean_pool(Tensor([[1.0, 2.0], [3.0, 4.0]])).numpy() == pytest.approx([2.0, 3.0])


def test_gradient_of_squared_norm() -> None:
    weights: Tensor = Tensor([1.0, 2.0], requires_grad=True)

    ops.sum_all(weights * weights).backward()

    assert weights.grad == pytest.approx([2.0, 4.0])


def test_gradients_accumulate_until_zeroed() -> None:
    weights: Tensor = Tensor([1.0, 2.0], requires_grad=True)

    ops.sum_all(weights * 3.0).backward()
    ops.sum_all(weights * 3.0).backward()
    assert weights.grad == pytest.approx([6.0, 6.0])

    weights.zero_grad()
    assert weights.grad is None


def test_backward_rejects_non_scalar_loss() -> None:
    with pytest.raises(ContractException):
        Tensor([1.0, 2.0], requires_grad=True).backward()


def test_matmul_rejects_mismatched_shapes() -> None:
    with pytest.raises(DimensionException):
        ops.matmul(Tensor(np.ones((2, 3))), Tensor(np.ones((2, 3))))


def test_no_grad_records_no_graph() -> None:
    weights: Tensor = Tensor([1.0, 2.0], requires_grad=True)

    with no_grad():
        assert not is_grad_enabled()
        output: Tensor = ops.tanh(weights)

    assert is_grad_enabled()
    assert not output.requires_grad
    assert output.graph_node is None


def test_dropout_is_identity_in_eval_mode() -> None:
    values: Tensor = Tensor(np.ones(50))
    rng: np.random.Generator = np.random.default_rng(0)

    with eval_mode():
        assert not is_training()
        assert ops.dropout(values, 0.5, rng) is values

    with train_mode():
        dropped: np.ndarray = ops.dropout(values, 0.5, rng).numpy()

    assert set(np.unique(dropped)) <= {0.0, 2.0}


def test_gru_cell_gradients_match_finite_differences() -> None:
    rng: np.random.Generator = np.random.default_rng(1)
    cell: GRUCell = GRUCell(3, 4, rng)
    value: Tensor = Tensor(rng.normal(size=3))
    hidden: Tensor = Tensor(rng.normal(size=4))

    error: float = check_gradients(
        lambda: ops.sum_all(cell(value, hidden)), cell.parameters() + [value, hidden]
    )

    assert error <= 1e-4


def test_adam_moves_only_its_own_parameters() -> None:
    rng: np.random.Generator = np.random.default_rng(2)
    trained: Linear = Linear(3, 2, rng)
    frozen: Linear = Linear(2, 1, rng)
    trained.assign_names("trained")
    frozen.assign_names("frozen")
    before: np.ndarray = frozen.weight.data.copy()

    optimizer: Adam = Adam(trained.parameters(), lr=0.1)
    loss: Tensor = ops.sum_all(frozen(trained(Tensor(np.ones(3)))))
    loss.backward()
    original: np.ndarray = trained.weight.data.copy()
    optimizer.step()

    assert np.array_equal(frozen.weight.data, before)
    assert not np.array_equal(trained.weight.data, original)
    assert optimizer.step_count == 1


def test_checkpoint_survives_a_save_and_load(tmp_path) -> None:
    parameter: Parameter = Parameter(np.arange(6.0).reshape(2, 3), name="weight")
    checkpoint: Checkpoint = Checkpoint(
        parameters={"weight": parameter.data},
        optimizer_states={"rank": {"step": np.array(3.0)}},
        metadata={"iteration": "7"},
    )
    path: str = str(tmp_path / "checkpoint.npz")

    checkpoint.save(path)
    restored: Checkpoint = Checkpoint.load(path)

    assert np.array_equal(restored.parameters["weight"], parameter.data)
    assert restored.optimizer_states["rank"]["step"] == pytest.approx(3.0)
    assert restored.metadata == {"iteration": "7"}


def test_checkpoint_load_rejects_garbage(tmp_path) -> None:
    path = tmp_path / "checkpoint.npz"
    path.write_text("not a checkpoint", encoding="utf-8")

    with pytest.raises(CheckpointException):
        Checkpoint.load(str(path))
