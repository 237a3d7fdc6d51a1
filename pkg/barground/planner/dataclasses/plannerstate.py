from dataclasses import dataclass

from ...autodiff import Tensor


@dataclass
class PlannerState:
    """
    class PlannerState

    The state activation s_t produced by phi and the GRU memory after it has
    consumed s_t. step is the 1-based index of the step being planned.
    """

    activation: Tensor
    hidden: Tensor
    step: int
