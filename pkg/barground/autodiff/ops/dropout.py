"""
module barground.autodiff.ops.dropout

Contains the inverted dropout operation
"""

from typing import Tuple

import numpy as np

from ..graphmode import is_training
from ..function import Function
from ..tensor import Tensor


class Dropout(Function):
    rate: float
    rng: np.random.Generator
    __mask: np.ndarray

    def __init__(
        self: "Dropout", *inputs: Tensor, rate: float, rng: np.random.Generator
    ) -> None:
        super().__init__(*inputs)
        self.rate = rate
        self.rng = rng

    def forward(self: "Dropout", value: np.ndarray) -> np.ndarray:
        self.__mask = (self.rng.random(value.shape) >= self.rate) / (1.0 - self.rate)
        return value * self.__mask

    def backward(self: "Dropout", grad: np.ndarray) -> Tuple[np.ndarray]:
        return (grad * self.__mask,)


def dropout(value: Tensor, rate: float, rng: np.random.Generator) -> Tensor:
    """
    Applies inverted dropout in training mode; identity in eval mode

    Args:
        value (Tensor): The activations to drop
        rate (float): Probability of zeroing an element, in [0, 1)
        rng (np.random.Generator): Source of the dropout mask

    Returns:
        Tensor: The dropped and rescaled activations

    Raises:
        Nothing
    """

    if not is_training() or rate <= 0.0:
        return value

    return Dropout.apply(value, rate=rate, rng=rng)
