"""
module barground.extractor.boundary

Contains the definition of the Boundary class, a half-open clip interval
[start, end) within a sequence of clips
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..autodiff.exceptions import ContractException
from ..config import InitBoundary


@dataclass(frozen=True)
class Boundary:
    """
    class Boundary

    A half-open clip interval [start, end). A boundary is valid for a sequence
    of N clips when 0 <= start < end <= N.
    """

    start: int
    end: int

    @classmethod
    def initial(
        cls: type["Boundary"],
        clip_count: int,
        init_boundary: InitBoundary = InitBoundary.QUARTER,
    ) -> "Boundary":
        """
        Constructs the boundary an episode starts from, [N/4, 3N/4) by default

        Args:
            clip_count (int): The number of clips N
            init_boundary (InitBoundary): Which symmetric initial boundary to use

        Returns:
            Boundary: The initial boundary

        Raises:
            ContractException: If the initial boundary is empty for this N
        """

        start, end = init_boundary.clip_range(clip_count)
        boundary: Boundary = cls(start, end)
        boundary.validate(clip_count)
        return boundary

    @property
    def length(self: "Boundary") -> int:
        return self.end - self.start

    def is_valid(self: "Boundary", clip_count: int) -> bool:
        return 0 <= self.start < self.end <= clip_count

    def validate(self: "Boundary", clip_count: int) -> None:
        if not self.is_valid(clip_count):
            raise ContractException(f"Boundary {self} is not valid for {clip_count} clips")

    def length_fraction(self: "Boundary", clip_count: int) -> float:
        return self.length / clip_count

    def normalized_location(self: "Boundary", clip_count: int) -> np.ndarray:
        """
        Returns [start / N, end / N], the boundary location as fractions of the
        clip sequence
        """

        return np.array([self.start / clip_count, self.end / clip_count])

    def to_inclusive(self: "Boundary") -> Tuple[int, int]:
        return self.start, self.end - 1

    def __str__(self: "Boundary") -> str:
        return f"[{self.start}, {self.end})"
