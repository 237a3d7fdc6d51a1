"""
module barground.inference.penalty

Contains penalize(), the Gaussian length penalty applied to alignment scores
at inference time
"""

import math

from ..extractor import Boundary


def penalize(
    score: float,
    boundary: Boundary,
    clip_count: int,
    penalty_baseline: float,
    penalty_modulation: float,
) -> float:
    """
    Discounts a score by how far the segment's length fraction strays from the
    baseline delta: S * exp(-P^2 / tau) with P = (end - start) / N - delta. An
    infinite tau disables the penalty.

    Args:
        score (float): The current-segment score S_c
        boundary (Boundary): The segment
        clip_count (int): N
        penalty_baseline (float): delta
        penalty_modulation (float): tau, positive

    Returns:
        float: The penalized score, same sign as score and no larger in magnitude

    Raises:
        Nothing
    """

    deviation: float = boundary.length_fraction(clip_count) - penalty_baseline
    return score * math.exp(-(deviation * deviation) / penalty_modulation)
