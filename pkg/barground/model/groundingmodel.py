"""
module barground.model.groundingmodel

Contains the definition of the GroundingModel class
"""

from typing import List

import numpy as np

from ..autodiff import Module, Parameter, Tensor
from ..config import ModelConfig
from ..evaluator import AlignmentEvaluator
from ..extractor import QueryEncoder
from ..planner import ActionPlanner


class GroundingModel(Module):
    """
    class GroundingModel

    The query encoder (extractor.*), the alignment evaluator (evaluator.*) and
    the action planner (planner.*). Parameters are initialized from rng in that
    order and the evaluator's dropout masks are drawn from the same generator.
    """

    config: ModelConfig
    rng: np.random.Generator

    def __init__(
        self: "GroundingModel",
        config: ModelConfig,
        rng: np.random.Generator,
        no_context: bool = False,
    ) -> None:
        super().__init__()

        self.config = config
        self.rng = rng
        self.extractor = QueryEncoder(
            config.vocab_size, config.embedding_dim, config.hidden_size, rng
        )
        self.evaluator = AlignmentEvaluator(
            config.feature_dim, config.hidden_size, config.dropout_rate, rng
        )
        self.planner = ActionPlanner(
            config.feature_dim, config.hidden_size, rng, no_context=no_context
        )
        self.assign_names()

    def encode(self: "GroundingModel", tokens) -> Tensor:
        return self.extractor(tokens).final

    def rank_parameters(self: "GroundingModel") -> List[Parameter]:
        """
        The parameters optimized by the ranking loss: extractor and evaluator
        """

        return self.extractor.parameters() + self.evaluator.parameters()

    def a2c_parameters(self: "GroundingModel", encoder_in_a2c: bool = False) -> List[Parameter]:
        """
        The parameters optimized by the actor-critic loss: the planner, plus the
        query encoder when encoder_in_a2c is set
        """

        if encoder_in_a2c:
            return self.planner.parameters() + self.extractor.parameters()

        return self.planner.parameters()
