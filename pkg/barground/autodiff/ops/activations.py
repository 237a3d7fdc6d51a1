"""
module barground.autodiff.ops.activations

Contains the elementwise nonlinearities
"""

from typing import Tuple

import numpy as np

from ..function import Function
from ..tensor import Tensor


class Sigmoid(Function):
    __output: np.ndarray

    def forward(self: "Sigmoid", value: np.ndarray) -> np.ndarray:
        # tanh form never overflows for large |x|
        self.__output = 0.5 * (1.0 + np.tanh(0.5 * value))
        return self.__output

    def backward(self: "Sigmoid", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (grad * self.__output * (1.0 - self.__output),)


class Tanh(Function):
    __output: np.ndarray

    def forward(self: "Tanh", value: np.ndarray) -> np.ndarray:
        self.__output = np.tanh(value)
        return self.__output

    def backward(self: "Tanh", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (grad * (1.0 - self.__output**2),)


class Relu(Function):
    __mask: np.ndarray

    def forward(self: "Relu", value: np.ndarray) -> np.ndarray:
        # the subgradient at exactly 0 is 0
        self.__mask = value > 0.0
        return np.where(self.__mask, value, 0.0)

    def backward(self: "Relu", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (grad * self.__mask,)


class Exp(Function):
    __output: np.ndarray

    def forward(self: "Exp", value: np.ndarray) -> np.ndarray:
        self.__output = np.exp(value)
        return self.__output

    def backward(self: "Exp", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (grad * self.__output,)


def sigmoid(value: Tensor) -> Tensor:
    return Sigmoid.apply(value)


def tanh(value: Tensor) -> Tensor:
    return Tanh.apply(value)


def relu(value: Tensor) -> Tensor:
    return Relu.apply(value)


def exp(value: Tensor) -> Tensor:
    return Exp.apply(value)
