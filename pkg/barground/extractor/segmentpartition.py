"""
module barground.extractor.segmentpartition

Contains the definition of the SegmentPartition class, the left, current and
right segments that a boundary divides a clip sequence into
"""

from dataclasses import dataclass

from ..autodiff import Tensor, ops
from .boundary import Boundary


@dataclass
class SegmentPartition:
    """
    class SegmentPartition

    The rows [0, start), [start, end) and [end, N) of a clip feature matrix.
    Left and right may be empty.
    """

    left: Tensor
    current: Tensor
    right: Tensor

    @property
    def current_count(self: "SegmentPartition") -> int:
        return self.current.shape[0]

    @classmethod
    def of(cls: type["SegmentPartition"], clips: Tensor, boundary: Boundary) -> "SegmentPartition":
        """
        Divides clips into its left, current and right segments

        Args:
            clips (Tensor): The (N, d_k) clip feature matrix
            boundary (Boundary): The current boundary

        Returns:
            SegmentPartition: Row slices of clips, views where possible

        Raises:
            ContractException: If boundary is not valid for N clips
        """

        clip_count: int = clips.shape[0]
        boundary.validate(clip_count)

        return cls(
            left=ops.slice_rows(clips, 0, boundary.start),
            current=ops.slice_rows(clips, boundary.start, boundary.end),
            right=ops.slice_rows(clips, boundary.end, clip_count),
        )


def partition(clips: Tensor, boundary: Boundary) -> SegmentPartition:
    return SegmentPartition.of(clips, boundary)
