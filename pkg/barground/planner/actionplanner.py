"""
module barground.planner.actionplanner

Contains the definition of the ActionPlanner class, the network that turns the
cross-gated view of the current boundary into a policy over the four actions
and a value estimate
"""

from typing import List, Tuple

import numpy as np

from .. import constants
from ..autodiff import GRUCell, Linear, Module, Tensor, ops
from ..autodiff.exceptions import ContractException
from .dataclasses import PlannerState, PolicyOutput


class ActionPlanner(Module):
    """
    class ActionPlanner

    Cross-gates the current segment feature and the query, fuses them with the
    global, left and right features and the normalized boundary location through
    two fully-connected layers (phi), carries a GRU memory across steps and reads
    the policy (actor) and value (critic) off the memory. With no_context the left
    and right features are left out of the fusion.
    """

    feature_dim: int
    hidden_size: int
    no_context: bool

    def __init__(
        self: "ActionPlanner",
        feature_dim: int,
        hidden_size: int,
        rng: np.random.Generator,
        no_context: bool = False,
    ) -> None:
        super().__init__()

        self.feature_dim = feature_dim
        self.hidden_size = hidden_size
        self.no_context = no_context

        self.gate_query = Linear(hidden_size, feature_dim, rng, bias=False)
        self.gate_segment = Linear(feature_dim, hidden_size, rng, bias=False)
        self.phi_input = Linear(self.input_width, hidden_size, rng)
        self.phi_output = Linear(hidden_size, hidden_size, rng)
        self.memory = GRUCell(hidden_size, hidden_size, rng)
        self.actor = Linear(hidden_size, constants.ACTION_COUNT, rng)
        self.critic = Linear(hidden_size, 1, rng)

    @property
    def input_width(self: "ActionPlanner") -> int:
        context_count: int = 1 if self.no_context else 3
        return self.hidden_size + self.feature_dim * (1 + context_count) + 2

    def initial_hidden(self: "ActionPlanner") -> Tensor:
        return self.memory.initial_hidden()

    def cross_gate(
        self: "ActionPlanner", segment_feature: Tensor, query: Tensor
    ) -> Tuple[Tensor, Tensor]:
        """
        Gates each modality by the other:
        f~c = sigmoid(W_s E) * f_c and E~ = sigmoid(W_v f_c) * E

        Args:
            segment_feature (Tensor): The pooled current-segment feature f_c
            query (Tensor): The query vector E

        Returns:
            Tuple[Tensor, Tensor]: The gated segment feature and the gated query

        Raises:
            ContractException: If either input has the wrong dimension
        """

        if segment_feature.shape != (self.feature_dim,) or query.shape != (self.hidden_size,):
            raise ContractException(
                f"cross_gate() expects shapes ({self.feature_dim},) and "
                f"({self.hidden_size},), got {segment_feature.shape} and {query.shape}"
            )

        gated_segment: Tensor = ops.sigmoid(self.gate_query(query)) * segment_feature
        gated_query: Tensor = ops.sigmoid(self.gate_segment(segment_feature)) * query
        return gated_segment, gated_query

    def build_state(
        self: "ActionPlanner",
        gated_query: Tensor,
        gated_segment: Tensor,
        global_feature: Tensor,
        left_feature: Tensor,
        right_feature: Tensor,
        location: Tensor,
        hidden: Tensor,
        step: int,
    ) -> PlannerState:
        inputs: List[Tensor] = [gated_query, gated_segment, global_feature]
        if not self.no_context:
            inputs += [left_feature, right_feature]
        inputs.append(location)

        activation: Tensor = self.phi_output(ops.relu(self.phi_input(ops.concat(inputs))))
        return PlannerState(
            activation=activation,
            hidden=self.memory(activation, hidden),
            step=step,
        )

    def policy_value(self: "ActionPlanner", state: PlannerState) -> PolicyOutput:
        return PolicyOutput(
            log_probs=ops.log_softmax(self.actor(state.hidden)),
            value=ops.index(self.critic(state.hidden), 0),
        )
