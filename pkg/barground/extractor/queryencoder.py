"""
module barground.extractor.queryencoder

Contains the definition of the QueryEncoder class, the embedding table and
single-layer GRU that summarize a query into one vector
"""

from typing import List, Sequence

import numpy as np

from ..autodiff import Embedding, GRUCell, Module, Tensor
from ..autodiff.exceptions import ContractException
from .exceptions import InvalidTokenException
from .queryencoding import QueryEncoding


class QueryEncoder(Module):
    """
    class QueryEncoder

    Embeds each token and runs a unidirectional GRU over the sequence. The last
    hidden state is the query representation E.
    """

    def __init__(
        self: "QueryEncoder",
        vocab_size: int,
        embedding_dim: int,
        hidden_size: int,
        rng: np.random.Generator,
    ) -> None:
        super().__init__()

        self.embedding = Embedding(vocab_size, embedding_dim, rng)
        self.gru = GRUCell(embedding_dim, hidden_size, rng)

    @property
    def vocab_size(self: "QueryEncoder") -> int:
        return self.embedding.vocab_size

    def __call__(self: "QueryEncoder", tokens: Sequence[int]) -> QueryEncoding:
        """
        Encodes a query

        Args:
            tokens (Sequence[int]): The token ids of the query, in order

        Returns:
            QueryEncoding: The final hidden state and every intermediate one

        Raises:
            ContractException: If the query is empty
            InvalidTokenException: If a token id is outside the vocabulary
        """

        if len(tokens) == 0:
            raise ContractException("Cannot encode an empty query")
        for token in tokens:
            if not 0 <= token < self.vocab_size:
                raise InvalidTokenException(
                    f"Token id {token} is outside the vocabulary of size {self.vocab_size}"
                )

        hidden: Tensor = self.gru.initial_hidden()
        states: List[Tensor] = []
        for token in tokens:
            hidden = self.gru(self.embedding(int(token)), hidden)
            states.append(hidden)

        return QueryEncoding(final=hidden, states=states)
