"""
module barground.autodiff.layers.grucell

Contains the definition of the GRUCell class, one step of a gated recurrent unit
"""

import numpy as np

from .. import ops
from ..module import Module
from ..tensor import Tensor
from .linear import Linear


class GRUCell(Module):
    """
    class GRUCell

    One gated recurrent unit step:

        z  = sigmoid(x Wz + h Uz)
        r  = sigmoid(x Wr + h Ur)
        n  = tanh(x Wn + r * (h Un))
        h' = (1 - z) * n + z * h

    The input projections carry the biases.
    """

    hidden_size: int

    def __init__(
        self: "GRUCell", input_size: int, hidden_size: int, rng: np.random.Generator
    ) -> None:
        super().__init__()

        self.hidden_size = hidden_size
        self.input_update = Linear(input_size, hidden_size, rng)
        self.input_reset = Linear(input_size, hidden_size, rng)
        self.input_candidate = Linear(input_size, hidden_size, rng)
        self.hidden_update = Linear(hidden_size, hidden_size, rng, bias=False)
        self.hidden_reset = Linear(hidden_size, hidden_size, rng, bias=False)
        self.hidden_candidate = Linear(hidden_size, hidden_size, rng, bias=False)

    def __call__(self: "GRUCell", value: Tensor, hidden: Tensor) -> Tensor:
        update: Tensor = ops.sigmoid(self.input_update(value) + self.hidden_update(hidden))
        reset: Tensor = ops.sigmoid(self.input_reset(value) + self.hidden_reset(hidden))
        candidate: Tensor = ops.tanh(
            self.input_candidate(value) + reset * self.hidden_candidate(hidden)
        )

        return (1.0 - update) * candidate + update * hidden

    def initial_hidden(self: "GRUCell") -> Tensor:
        return Tensor(np.zeros(self.hidden_size))
