"""
module barground.config.initboundary

Contains the definition of the InitBoundary enum, the choice of initial
boundary an episode starts from
"""

from enum import StrEnum
from typing import Tuple


class InitBoundary(StrEnum):
    """
    class InitBoundary

    Symmetric initial boundaries [N/d, (d-1)N/d) for d = 4, 3 and 5
    """

    QUARTER = "quarter"
    THIRD = "third"
    FIFTH = "fifth"

    @property
    def denominator(self: "InitBoundary") -> int:
        match self:
            case InitBoundary.QUARTER:
                return 4
            case InitBoundary.THIRD:
                return 3
            case InitBoundary.FIFTH:
                return 5

    def clip_range(self: "InitBoundary", clip_count: int) -> Tuple[int, int]:
        return (
            clip_count // self.denominator,
            clip_count * (self.denominator - 1) // self.denominator,
        )
