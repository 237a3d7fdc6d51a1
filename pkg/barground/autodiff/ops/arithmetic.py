"""
module barground.autodiff.ops.arithmetic

Contains the elementwise arithmetic operations and the matrix product
"""

from typing import Tuple

import numpy as np

from ..exceptions import DimensionException
from ..function import Function
from ..tensor import Tensor
from .broadcast import broadcast_shape, unbroadcast


class Add(Function):
    def forward(self: "Add", left: np.ndarray, right: np.ndarray) -> np.ndarray:
        broadcast_shape(left.shape, right.shape)
        return left + right

    def backward(self: "Add", grad: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        left, right = self.inputs
        return unbroadcast(grad, left.shape), unbroadcast(grad, right.shape)


class Sub(Function):
    def forward(self: "Sub", left: np.ndarray, right: np.ndarray) -> np.ndarray:
        broadcast_shape(left.shape, right.shape)
        return left - right

    def backward(self: "Sub", grad: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        left, right = self.inputs
        return unbroadcast(grad, left.shape), unbroadcast(-grad, right.shape)


class Mul(Function):
    __left: np.ndarray
    __right: np.ndarray

    def forward(self: "Mul", left: np.ndarray, right: np.ndarray) -> np.ndarray:
        broadcast_shape(left.shape, right.shape)
        self.__left = left
        self.__right = right
        return left * right

    def backward(self: "Mul", grad: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        return (
            unbroadcast(grad * self.__right, self.__left.shape),
            unbroadcast(grad * self.__left, self.__right.shape),
        )


class Scale(Function):
    factor: float

    def __init__(self: "Scale", *inputs: Tensor, factor: float) -> None:
        super().__init__(*inputs)
        self.factor = factor

    def forward(self: "Scale", value: np.ndarray) -> np.ndarray:
        return value * self.factor

    def backward(self: "Scale", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (grad * self.factor,)


class MatMul(Function):
    """
    class MatMul

    Matrix product of operands with at most two dimensions. A 1-d left operand
    is treated as a row vector and a 1-d right operand as a column vector.
    """

    __left: np.ndarray
    __right: np.ndarray

    def forward(self: "MatMul", left: np.ndarray, right: np.ndarray) -> np.ndarray:
        if (
            left.ndim not in (1, 2)
            or right.ndim not in (1, 2)
            or left.shape[-1] != right.shape[0]
        ):
            raise DimensionException(
                f"Cannot multiply shapes {left.shape} and {right.shape}"
            )

        self.__left = left
        self.__right = right
        return left @ right

    def backward(self: "MatMul", grad: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        left: np.ndarray = self.__left if self.__left.ndim == 2 else self.__left[None, :]
        right: np.ndarray = (
            self.__right if self.__right.ndim == 2 else self.__right[:, None]
        )
        grad_2d: np.ndarray = grad.reshape(left.shape[0], right.shape[1])

        return (
            (grad_2d @ right.T).reshape(self.__left.shape),
            (left.T @ grad_2d).reshape(self.__right.shape),
        )


def add(left: Tensor, right: Tensor) -> Tensor:
    return Add.apply(left, right)


def sub(left: Tensor, right: Tensor) -> Tensor:
    return Sub.apply(left, right)


def mul(left: Tensor, right: Tensor) -> Tensor:
    return Mul.apply(left, right)


def scale(value: Tensor, factor: float) -> Tensor:
    return Scale.apply(value, factor=factor)


def matmul(left: Tensor, right: Tensor) -> Tensor:
    return MatMul.apply(left, right)
