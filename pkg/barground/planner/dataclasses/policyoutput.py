"""
module barground.planner.dataclasses.policyoutput

Contains the definition of the PolicyOutput class
"""

from dataclasses import dataclass

from ...autodiff import Tensor, ops


@dataclass
class PolicyOutput:
    """
    class PolicyOutput

    The actor's log-probabilities over the four actions and the critic's value
    estimate of the current state
    """

    log_probs: Tensor
    value: Tensor

    @property
    def probs(self: "PolicyOutput") -> Tensor:
        return ops.exp(self.log_probs)

    def entropy(self: "PolicyOutput") -> Tensor:
        return -ops.sum_all(self.probs * self.log_probs)

    def log_prob(self: "PolicyOutput", action_index: int) -> Tensor:
        return ops.index(self.log_probs, action_index)
