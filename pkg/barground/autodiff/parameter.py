"""
module barground.autodiff.parameter

Contains the definition of the Parameter class, a learnable tensor with a dotted
name path (for example 'evaluator.theta.fc.weight')
"""

import math
from typing import Tuple

import numpy as np

from .tensor import Tensor


class Parameter(Tensor):
    """
    class Parameter

    A tensor that always requires a gradient and carries the unique name it is
    registered under within a model
    """

    name: str

    def __init__(self: "Parameter", data, name: str = "") -> None:
        super().__init__(data, requires_grad=True)
        self.name = name

    @classmethod
    def uniform(
        cls: type["Parameter"],
        shape: Tuple[int, ...],
        fan_in: int,
        rng: np.random.Generator,
    ) -> "Parameter":
        """
        Constructs a parameter initialized uniformly in [-1/sqrt(fan_in), 1/sqrt(fan_in)]

        Args:
            shape (Tuple[int, ...]): The shape of the parameter
            fan_in (int): The number of inputs feeding each output unit
            rng (np.random.Generator): The seeded source of the initial values

        Returns:
            Parameter: The initialized parameter

        Raises:
            Nothing
        """

        bound: float = 1.0 / math.sqrt(max(fan_in, 1))
        return cls(rng.uniform(-bound, bound, size=shape))

    def __repr__(self: "Parameter") -> str:
        return f"Parameter(name={self.name!r}, shape={self.shape})"
