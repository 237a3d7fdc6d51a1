"""
module barground.autodiff.layers.linear

Contains the definition of the Linear class, a fully-connected layer
"""

import numpy as np

from ..module import Module
from ..parameter import Parameter
from ..tensor import Tensor


class Linear(Module):
    """
    class Linear

    Fully-connected layer y = x W + b over a vector x or the rows of a matrix x.
    The weight is stored as (in_features, out_features).
    """

    in_features: int
    out_features: int

    def __init__(
        self: "Linear",
        in_features: int,
        out_features: int,
        rng: np.random.Generator,
        bias: bool = True,
    ) -> None:
        super().__init__()

        self.in_features = in_features
        self.out_features = out_features
        self.weight = Parameter.uniform((in_features, out_features), in_features, rng)
        if bias:
            self.bias = Parameter.uniform((out_features,), in_features, rng)
        else:
            self.bias = None

    def __call__(self: "Linear", value: Tensor) -> Tensor:
        output: Tensor = value @ self.weight
        if self.bias is not None:
            output = output + self.bias

        return output
