"""
module barground.corpus.dataclasses.samplerecord

Contains the definition of the SampleRecord class, the line-oriented JSON form
of a GroundingSample
"""

from dataclasses import dataclass
from typing import List, Optional

from dataclasses_json import dataclass_json, Undefined
import numpy as np

from ...extractor import Boundary
from .groundingsample import GroundingSample


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class SampleRecord:
    video_id: str
    clip_count: int
    query_tokens: List[int]
    gt_segment: Optional[List[int]]
    clip_features: List[List[float]]

    @staticmethod
    def from_sample(sample: GroundingSample) -> "SampleRecord":
        return SampleRecord(
            video_id=sample.video_id,
            clip_count=sample.clip_count,
            query_tokens=list(sample.query_tokens),
            gt_segment=(
                None
                if sample.gt_segment is None
                else [sample.gt_segment.start, sample.gt_segment.end]
            ),
            clip_features=sample.clip_features.tolist(),
        )

    def to_sample(self: "SampleRecord") -> GroundingSample:
        return GroundingSample(
            video_id=self.video_id,
            clip_features=np.asarray(self.clip_features, dtype=np.float64),
            query_tokens=tuple(int(token) for token in self.query_tokens),
            gt_segment=None if self.gt_segment is None else Boundary(*self.gt_segment),
        )
