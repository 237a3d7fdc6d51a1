"""
module barground.evaluator.dataclasses.alignmentscores

Contains the definition of the AlignmentScores class
"""

from dataclasses import dataclass

from ...autodiff import Tensor


@dataclass
class AlignmentScores:
    """
    class AlignmentScores

    The alignment of the query with the whole video (global), the current
    segment and the segments left and right of it. Each score is a scalar
    tensor holding a cosine in [-1, 1]; empty segments score -1.
    """

    global_score: Tensor
    current: Tensor
    left: Tensor
    right: Tensor

    def as_floats(self: "AlignmentScores") -> tuple[float, float, float, float]:
        return (
            self.global_score.item(),
            self.current.item(),
            self.left.item(),
            self.right.item(),
        )
