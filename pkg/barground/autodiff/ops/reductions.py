"""
module barground.autodiff.ops.reductions

Contains the reducing and normalizing operations: sums, mean pooling,
softmax/log-softmax and L2 normalization
"""

from typing import Tuple

import numpy as np

from ..exceptions import DimensionException
from ..function import Function
from ..tensor import Tensor


class Sum(Function):
    __shape: Tuple[int, ...]

    def forward(self: "Sum", value: np.ndarray) -> np.ndarray:
        self.__shape = value.shape
        return np.asarray(value.sum())

    def backward(self: "Sum", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (np.full(self.__shape, float(grad)),)


class MeanPool(Function):
    """
    class MeanPool

    Column mean of an (M, d) matrix. An empty set of rows (M = 0) pools to the
    zero vector.
    """

    __row_count: int

    def forward(self: "MeanPool", rows: np.ndarray) -> np.ndarray:
        if rows.ndim != 2:
            raise DimensionException(
                f"mean_pool() expects an (M, d) matrix but received shape {rows.shape}"
            )

        self.__row_count = rows.shape[0]
        if self.__row_count == 0:
            return np.zeros(rows.shape[1])

        return rows.mean(axis=0)

    def backward(self: "MeanPool", grad: np.ndarray) -> Tuple[np.ndarray]:
        if self.__row_count == 0:
            return (np.zeros((0, grad.shape[0])),)

        return (np.tile(grad / self.__row_count, (self.__row_count, 1)),)


def _check_vector(name: str, value: np.ndarray) -> None:
    if value.ndim != 1 or value.shape[0] == 0:
        raise DimensionException(
            f"{name}() expects a non-empty vector but received shape {value.shape}"
        )


class Softmax(Function):
    __output: np.ndarray

    def forward(self: "Softmax", logits: np.ndarray) -> np.ndarray:
        _check_vector("softmax", logits)
        shifted: np.ndarray = np.exp(logits - logits.max())
        self.__output = shifted / shifted.sum()
        return self.__output

    def backward(self: "Softmax", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (self.__output * (grad - np.dot(grad, self.__output)),)


class LogSoftmax(Function):
    __probabilities: np.ndarray

    def forward(self: "LogSoftmax", logits: np.ndarray) -> np.ndarray:
        _check_vector("log_softmax", logits)
        shifted: np.ndarray = logits - logits.max()
        log_normalizer: float = np.log(np.exp(shifted).sum())
        self.__probabilities = np.exp(shifted - log_normalizer)
        return shifted - log_normalizer

    def backward(self: "LogSoftmax", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (grad - self.__probabilities * grad.sum(),)


class L2Normalize(Function):
    """
    class L2Normalize

    Scales a vector to unit Euclidean norm. The zero vector maps to itself with
    a zero gradient.
    """

    __norm: float
    __output: np.ndarray

    def forward(self: "L2Normalize", value: np.ndarray) -> np.ndarray:
        if value.ndim != 1:
            raise DimensionException(
                f"l2_normalize() expects a vector but received shape {value.shape}"
            )

        self.__norm = float(np.linalg.norm(value))
        if self.__norm == 0.0:
            self.__output = np.zeros_like(value)
        else:
            self.__output = value / self.__norm

        return self.__output

    def backward(self: "L2Normalize", grad: np.ndarray) -> Tuple[np.ndarray]:
        if self.__norm == 0.0:
            return (np.zeros_like(grad),)

        return (
            (grad - self.__output * np.dot(self.__output, grad)) / self.__norm,
        )


def sum_all(value: Tensor) -> Tensor:
    return Sum.apply(value)


def mean_pool(rows: Tensor) -> Tensor:
    return MeanPool.apply(rows)


def softmax(logits: Tensor) -> Tensor:
    return Softmax.apply(logits)


def log_softmax(logits: Tensor) -> Tensor:
    return LogSoftmax.apply(logits)


def l2_normalize(value: Tensor) -> Tensor:
    return L2Normalize.apply(value)
