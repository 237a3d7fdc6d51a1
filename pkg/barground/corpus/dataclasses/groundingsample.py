"""
module barground.corpus.dataclasses.groundingsample

Contains the definition of the GroundingSample class, one video-query pair of
a corpus
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ...extractor import Boundary
from .trainingsample import TrainingSample


@dataclass(frozen=True, eq=False)
class GroundingSample:
    """
    class GroundingSample

    One video-query pair: an (N, d_k) clip feature matrix, the query token ids
    and, for evaluation only, the ground-truth segment
    """

    video_id: str
    clip_features: np.ndarray
    query_tokens: Tuple[int, ...]
    gt_segment: Boundary | None = None

    @property
    def clip_count(self: "GroundingSample") -> int:
        return self.clip_features.shape[0]

    @property
    def feature_dim(self: "GroundingSample") -> int:
        return self.clip_features.shape[1]

    def training_view(self: "GroundingSample") -> TrainingSample:
        return TrainingSample(
            video_id=self.video_id,
            clip_features=self.clip_features,
            query_tokens=self.query_tokens,
        )

    def __eq__(self: "GroundingSample", other: object) -> bool:
        if not isinstance(other, GroundingSample):
            return NotImplemented

        return (
            self.video_id == other.video_id
            and self.query_tokens == other.query_tokens
            and self.gt_segment == other.gt_segment
            and np.array_equal(self.clip_features, other.clip_features)
        )

    __hash__ = None
