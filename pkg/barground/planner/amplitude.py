"""
module barground.planner.amplitude

Contains amplitude(), the score-dependent amplitude factor nu, and
apply_action(), which shifts one endpoint of a boundary by ceil(N / nu) clips.
A larger nu means a smaller shift: the better the current segment aligns with
the query relative to the whole video, the finer the moves.
"""

import math

from .. import constants
from ..extractor import Boundary
from .dataclasses import Action
from .enums import ActionKind


def amplitude(current_score: float, global_score: float) -> int:
    """
    Computes nu = max(1, floor(10 * (1 + 2 * tanh(S_c - S_g))))

    Args:
        current_score (float): S_c of the current boundary
        global_score (float): S_g of the whole video

    Returns:
        int: nu, an integer in [1, 30]

    Raises:
        Nothing
    """

    raw: float = constants.AMPLITUDE_BASE * (
        1.0 + 2.0 * math.tanh(current_score - global_score)
    )
    return max(1, math.floor(raw))


def shift_clips(clip_count: int, amplitude_factor: int) -> int:
    return math.ceil(clip_count / amplitude_factor)


def apply_action(boundary: Boundary, action: Action, clip_count: int) -> Boundary:
    """
    Shifts the endpoint named by the action, then clamps so that
    0 <= start < end <= N. Every action is total.

    Args:
        boundary (Boundary): A valid boundary
        action (Action): The action and its shift in clips
        clip_count (int): N

    Returns:
        Boundary: The shifted and clamped boundary

    Raises:
        ContractException: If boundary is not valid for N clips
    """

    boundary.validate(clip_count)
    start, end = boundary.start, boundary.end
    shift: int = action.amplitude_clips

    match action.kind:
        case ActionKind.START_BACK:
            start = max(0, start - shift)
        case ActionKind.START_FWD:
            start = min(end - 1, start + shift)
        case ActionKind.END_BACK:
            end = max(start + 1, end - shift)
        case ActionKind.END_FWD:
            end = min(clip_count, end + shift)

    return Boundary(start, end)
