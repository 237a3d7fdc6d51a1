"""
module barground.corpus.dataclasses.trainingsample

Contains the definition of the TrainingSample class, the view of a sample that
training code receives
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class TrainingSample:
    """
    class TrainingSample

    A video-query pair without its ground-truth segment. Training losses only
    ever see this type.
    """

    video_id: str
    clip_features: np.ndarray
    query_tokens: Tuple[int, ...]

    @property
    def clip_count(self: "TrainingSample") -> int:
        return self.clip_features.shape[0]
