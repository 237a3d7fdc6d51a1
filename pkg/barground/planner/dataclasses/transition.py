"""
module barground.planner.dataclasses.transition

Contains the definition of the Transition class, one step of a trajectory
"""

from dataclasses import dataclass

from ...autodiff import Tensor
from ...extractor import Boundary
from .action import Action


@dataclass
class Transition:
    """
    class Transition

    One refinement step t: the boundary before and after the action, the amplitude
    factor nu the action was sized with, the current-segment scores before and
    after, the reward and, unless the action was picked at random, the policy's
    log-probability of the action, its entropy and the critic's value
    """

    step: int
    boundary_before: Boundary
    action: Action
    amplitude: int
    boundary_after: Boundary
    score_before: float
    score_after: float
    reward: float
    log_prob: Tensor | None = None
    entropy: Tensor | None = None
    value: Tensor | None = None
