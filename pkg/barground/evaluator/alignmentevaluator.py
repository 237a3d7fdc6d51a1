"""
module barground.evaluator.alignmentevaluator

Contains the definition of the AlignmentEvaluator class, the cross-modal
alignment evaluator that scores how well a clip segment matches a query
"""

import math

import numpy as np

from .. import constants
from ..autodiff import Module, Tensor, ops
from ..autodiff.exceptions import ContractException
from ..extractor import Boundary, SegmentPartition
from .dataclasses import AlignmentScores, Attention
from .filterlayer import FilterLayer


class AlignmentEvaluator(Module):
    """
    class AlignmentEvaluator

    Attention-pools the filtered clips of a segment against the query vector E
    and scores the pooled feature by its cosine with E
    """

    hidden_size: int

    def __init__(
        self: "AlignmentEvaluator",
        feature_dim: int,
        hidden_size: int,
        dropout_rate: float,
        rng: np.random.Generator,
    ) -> None:
        super().__init__()

        self.hidden_size = hidden_size
        self.theta = FilterLayer(feature_dim, hidden_size, dropout_rate, rng)

    def attend(self: "AlignmentEvaluator", segment: Tensor, query: Tensor) -> Attention:
        """
        Scaled dot-product attention of the query over the filtered clips:
        a = softmax(theta(F) E / sqrt(k)), A = sum_i a_i theta(F_i)

        Args:
            segment (Tensor): The (M, d_k) clip features of the segment
            query (Tensor): The query vector E of dimension k

        Returns:
            Attention: The weights a and the attended feature A

        Raises:
            ContractException: If the segment is empty
        """

        if segment.shape[0] == 0:
            raise ContractException("Cannot attend over an empty segment")

        filtered: Tensor = self.theta(segment)
        weights: Tensor = ops.softmax((filtered @ query) / math.sqrt(self.hidden_size))
        return Attention(weights=weights, attended=weights @ filtered)

    def score(self: "AlignmentEvaluator", segment: Tensor, query: Tensor) -> Tensor:
        """
        Cosine of the attended segment feature with the query. Empty segments
        score -1.
        """

        if segment.shape[0] == 0:
            return Tensor(constants.EMPTY_SEGMENT_SCORE)

        attended: Tensor = self.attend(segment, query).attended
        return ops.l2_normalize(attended) @ ops.l2_normalize(query)

    def score_state(
        self: "AlignmentEvaluator", clips: Tensor, boundary: Boundary, query: Tensor
    ) -> AlignmentScores:
        parts: SegmentPartition = SegmentPartition.of(clips, boundary)

        return AlignmentScores(
            global_score=self.score(clips, query),
            current=self.score(parts.current, query),
            left=self.score(parts.left, query),
            right=self.score(parts.right, query),
        )
