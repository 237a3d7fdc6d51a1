"""
module barground.autodiff.layers.embedding

Contains the definition of the Embedding class, a learned lookup table of token
vectors
"""

import numpy as np

from .. import ops
from ..module import Module
from ..parameter import Parameter
from ..tensor import Tensor


class Embedding(Module):
    vocab_size: int
    embedding_dim: int

    def __init__(
        self: "Embedding", vocab_size: int, embedding_dim: int, rng: np.random.Generator
    ) -> None:
        super().__init__()

        self.vocab_size = vocab_size
        self.embedding_dim = embedding_dim
        self.weight = Parameter.uniform((vocab_size, embedding_dim), embedding_dim, rng)

    def __call__(self: "Embedding", token_id: int) -> Tensor:
        return ops.index(self.weight, token_id)
