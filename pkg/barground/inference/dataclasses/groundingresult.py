"""
module barground.inference.dataclasses.groundingresult

Contains the definition of the GroundingResult class
"""

from dataclasses import dataclass
from typing import List

from ...extractor import Boundary
from .candidate import Candidate


@dataclass
class GroundingResult:
    """
    class GroundingResult

    The single segment predicted for a query, the index of the candidate it
    came from and every candidate examined along the way
    """

    video_id: str
    clip_count: int
    candidates: List[Candidate]
    best_index: int
    stopped: bool = False

    @property
    def boundary(self: "GroundingResult") -> Boundary:
        return self.candidates[self.best_index].boundary

    @property
    def best_score(self: "GroundingResult") -> float:
        return self.candidates[self.best_index].penalized_score
