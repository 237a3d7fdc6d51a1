"""
module barground.planner.dataclasses.trajectory

Contains the definition of the Trajectory class, the record of one episode
"""

from dataclasses import dataclass, field
from typing import List

import numpy as np

from ...extractor import Boundary
from .transition import Transition


@dataclass
class Trajectory:
    """
    class Trajectory

    Every transition of an episode plus the initial boundary, its score S_c_0
    and the global score S_g. stopped is set when a stop threshold ended the
    episode early.
    """

    initial_boundary: Boundary
    initial_score: float
    global_score: float
    transitions: List[Transition] = field(default_factory=list)
    stopped: bool = False

    def __len__(self: "Trajectory") -> int:
        return len(self.transitions)

    @property
    def boundaries(self: "Trajectory") -> List[Boundary]:
        """
        The visited boundaries b_0..b_T, starting with the initial boundary
        """

        return [self.initial_boundary] + [
            transition.boundary_after for transition in self.transitions
        ]

    @property
    def current_scores(self: "Trajectory") -> List[float]:
        return [self.initial_score] + [
            transition.score_after for transition in self.transitions
        ]

    @property
    def rewards(self: "Trajectory") -> np.ndarray:
        return np.array([transition.reward for transition in self.transitions])

    @property
    def values(self: "Trajectory") -> np.ndarray:
        return np.array(
            [
                0.0 if transition.value is None else transition.value.item()
                for transition in self.transitions
            ]
        )
