"""
module barground.evaluator.filterlayer

Contains the definition of the FilterLayer class, the filter function theta
applied to every clip before attention
"""

import numpy as np

from ..autodiff import Linear, Module, Tensor, ops


class FilterLayer(Module):
    """
    class FilterLayer

    A fully-connected layer from the clip feature space to the query space,
    followed by ReLU and inverted dropout
    """

    dropout_rate: float
    __rng: np.random.Generator

    def __init__(
        self: "FilterLayer",
        feature_dim: int,
        hidden_size: int,
        dropout_rate: float,
        rng: np.random.Generator,
    ) -> None:
        super().__init__()

        self.fc = Linear(feature_dim, hidden_size, rng)
        self.dropout_rate = dropout_rate
        self.__rng = rng

    def __call__(self: "FilterLayer", rows: Tensor) -> Tensor:
        return ops.dropout(ops.relu(self.fc(rows)), self.dropout_rate, self.__rng)
