"""
module barground.inference.tiou

Contains temporal_iou(), the overlap metric between two segments
"""

from ..autodiff.exceptions import ContractException
from ..extractor import Boundary


def temporal_iou(first: Boundary, second: Boundary) -> float:
    """
    Intersection over union of two half-open intervals, measured on their
    continuous extents

    Args:
        first (Boundary): A non-empty segment
        second (Boundary): A non-empty segment

    Returns:
        float: A value in [0, 1]; 0 for disjoint segments, 1 for equal ones

    Raises:
        ContractException: If either segment is empty
    """

    if first.length <= 0 or second.length <= 0:
        raise ContractException(f"tIoU is undefined for empty segments {first} and {second}")

    intersection: int = max(0, min(first.end, second.end) - max(first.start, second.start))
    union: int = first.length + second.length - intersection
    return intersection / union
