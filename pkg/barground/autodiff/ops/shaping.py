"""
module barground.autodiff.ops.shaping

Contains the operations that select, slice, join or transpose tensors without
changing their values
"""

from typing import Sequence, Tuple

import numpy as np

from ..exceptions import DimensionException
from ..function import Function
from ..tensor import Tensor


class Concat(Function):
    __lengths: Tuple[int, ...]

    def forward(self: "Concat", *vectors: np.ndarray) -> np.ndarray:
        if len(vectors) == 0 or any(vector.ndim != 1 for vector in vectors):
            raise DimensionException("concat() expects one or more vectors")

        self.__lengths = tuple(vector.shape[0] for vector in vectors)
        return np.concatenate(vectors)

    def backward(self: "Concat", grad: np.ndarray) -> Tuple[np.ndarray, ...]:
        return tuple(np.split(grad, np.cumsum(self.__lengths)[:-1]))


class Stack(Function):
    def forward(self: "Stack", *values: np.ndarray) -> np.ndarray:
        if len(values) == 0 or any(value.shape != values[0].shape for value in values):
            raise DimensionException("stack() expects one or more equally shaped tensors")

        return np.stack(values)

    def backward(self: "Stack", grad: np.ndarray) -> Tuple[np.ndarray, ...]:
        return tuple(grad[index] for index in range(grad.shape[0]))


class Index(Function):
    index: int
    __shape: Tuple[int, ...]

    def __init__(self: "Index", *inputs: Tensor, index: int) -> None:
        super().__init__(*inputs)
        self.index = index

    def forward(self: "Index", value: np.ndarray) -> np.ndarray:
        if value.ndim == 0 or not -value.shape[0] <= self.index < value.shape[0]:
            raise DimensionException(
                f"Index {self.index} out of range for shape {value.shape}"
            )

        self.__shape = value.shape
        return value[self.index]

    def backward(self: "Index", grad: np.ndarray) -> Tuple[np.ndarray]:
        full: np.ndarray = np.zeros(self.__shape)
        full[self.index] = grad
        return (full,)


class SliceRows(Function):
    start: int
    stop: int
    __shape: Tuple[int, ...]

    def __init__(self: "SliceRows", *inputs: Tensor, start: int, stop: int) -> None:
        super().__init__(*inputs)
        self.start = start
        self.stop = stop

    def forward(self: "SliceRows", value: np.ndarray) -> np.ndarray:
        if value.ndim == 0 or not 0 <= self.start <= self.stop <= value.shape[0]:
            raise DimensionException(
                f"Row slice [{self.start}, {self.stop}) out of range for shape "
                f"{value.shape}"
            )

        self.__shape = value.shape
        # a view; tensors are never mutated in place
        return value[self.start : self.stop]

    def backward(self: "SliceRows", grad: np.ndarray) -> Tuple[np.ndarray]:
        full: np.ndarray = np.zeros(self.__shape)
        full[self.start : self.stop] = grad
        return (full,)


class Transpose(Function):
    def forward(self: "Transpose", matrix: np.ndarray) -> np.ndarray:
        if matrix.ndim != 2:
            raise DimensionException(
                f"transpose() expects a matrix but received shape {matrix.shape}"
            )

        return matrix.T

    def backward(self: "Transpose", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (grad.T,)


class Diagonal(Function):
    def forward(self: "Diagonal", matrix: np.ndarray) -> np.ndarray:
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionException(
                f"diagonal() expects a square matrix but received shape {matrix.shape}"
            )

        return np.diag(matrix).copy()

    def backward(self: "Diagonal", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (np.diag(grad),)


def concat(vectors: Sequence[Tensor]) -> Tensor:
    return Concat.apply(*vectors)


def stack(values: Sequence[Tensor]) -> Tensor:
    return Stack.apply(*values)


def index(value: Tensor, position: int) -> Tensor:
    return Index.apply(value, index=position)


def slice_rows(value: Tensor, start: int, stop: int) -> Tensor:
    return SliceRows.apply(value, start=start, stop=stop)


def transpose(matrix: Tensor) -> Tensor:
    return Transpose.apply(matrix)


def diagonal(matrix: Tensor) -> Tensor:
    return Diagonal.apply(matrix)
