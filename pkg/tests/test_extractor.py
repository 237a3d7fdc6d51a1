import numpy as np
import pytest

from barground.autodiff import Tensor, check_gradients
from barground.autodiff.exceptions import ContractException
from barground.config import InitBoundary
from barground.extractor import Boundary, QueryEncoder, SegmentPartition, partition
from barground.extractor.exceptions import InvalidTokenException


def test_partition_of_a_centered_boundary() -> None:
    clips: Tensor = Tensor(np.arange(200.0).reshape(100, 2))

    parts: SegmentPartition = SegmentPartition.of(clips, Boundary(25, 75))

    assert (parts.left.shape[0], parts.current_count, parts.right.shape[0]) == (25, 50, 25)
    assert parts.current.numpy()[0] == pytest.approx([50.0, 51.0])
    assert Boundary(25, 75).normalized_location(100) == pytest.approx([0.25, 0.75])


def test_partition_at_the_video_edges_has_empty_context() -> None:
    parts: SegmentPartition = SegmentPartition.of(Tensor(np.ones((10, 3))), Boundary(0, 10))

    assert parts.left.shape[0] == 0
    assert parts.right.shape[0] == 0


def test_partition_rejects_an_invalid_boundary() -> None:
    with pytest.raises(ContractException):
        SegmentPartition.of(Tensor(np.ones((10, 3))), Boundary(4, 4))


def test_partition_is_lossless() -> None:
    rng: np.random.Generator = np.random.default_rng(7)

    for _ in range(200):
        clip_count: int = int(rng.integers(1, 60))
        features: np.ndarray = rng.normal(size=(clip_count, 3))
        start: int = int(rng.integers(0, clip_count))
        boundary: Boundary = Boundary(start, int(rng.integers(start + 1, clip_count + 1)))

        parts: SegmentPartition = partition(Tensor(features), boundary)
        sizes: tuple = (parts.left.shape[0], parts.current_count, parts.right.shape[0])

        assert sizes == (boundary.start, boundary.length, clip_count - boundary.end)
        assert sum(sizes) == clip_count
        assert np.array_equal(
            np.concatenate([parts.left.numpy(), parts.current.numpy(), parts.right.numpy()]),
            features,
        )


@pytest.mark.parametrize("boundary", [Boundary(3, 11), Boundary(10, 11), Boundary(-1, 4)])
def test_partition_rejects_boundaries_past_the_video(boundary) -> None:
    with pytest.raises(ContractException):
        partition(Tensor(np.ones((10, 3))), boundary)


@pytest.mark.parametrize(
    "init_boundary,expected",
    [
        (InitBoundary.QUARTER, Boundary(25, 75)),
        (InitBoundary.THIRD, Boundary(33, 66)),
        (InitBoundary.FIFTH, Boundary(20, 80)),
    ],
)
def test_initial_boundaries(init_boundary, expected) -> None:
    assert Boundary.initial(100, init_boundary) == expected


def test_boundary_formatting() -> None:
    assert str(Boundary(3, 9)) == "[3, 9)"
    assert Boundary(3, 9).length_fraction(12) == pytest.approx(0.5)


def test_query_encoder_returns_one_state_per_token() -> None:
    encoder: QueryEncoder = QueryEncoder(10, 4, 6, np.random.default_rng(0))

    encoding = encoder([1, 5, 2])

    assert encoding.final.shape == (6,)
    assert len(encoding.states) == 3
    assert np.array_equal(encoding.states[-1].numpy(), encoding.final.numpy())


def test_zero_weights_encode_every_query_to_zero() -> None:
    encoder: QueryEncoder = QueryEncoder(10, 4, 6, np.random.default_rng(0))
    for parameter in encoder.parameters():
        parameter.data[...] = 0.0

    encoding = encoder([4, 9, 0, 4])

    assert np.array_equal(encoding.final.numpy(), np.zeros(6))
    assert all(np.array_equal(state.numpy(), np.zeros(6)) for state in encoding.states)


def test_query_encoder_rejects_bad_queries() -> None:
    encoder: QueryEncoder = QueryEncoder(10, 4, 6, np.random.default_rng(0))

    with pytest.raises(ContractException):
        encoder([])
    with pytest.raises(InvalidTokenException):
        encoder([1, 10])


def test_query_gradients_reach_the_embedding_rows() -> None:
    encoder: QueryEncoder = QueryEncoder(10, 4, 6, np.random.default_rng(0))
    projection: Tensor = Tensor(np.random.default_rng(1).normal(size=6))

    error: float = check_gradients(
        lambda: encoder([3, 7, 3]).final @ projection, encoder.parameters()
    )

    assert error <= 1e-4


def test_order_of_tokens_matters() -> None:
    encoder: QueryEncoder = QueryEncoder(10, 4, 6, np.random.default_rng(0))

    first: np.ndarray = encoder([1, 2]).final.numpy()
    second: np.ndarray = encoder([2, 1]).final.numpy()

    assert not np.allclose(first, second)
