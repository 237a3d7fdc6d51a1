from dataclasses import dataclass

from ...extractor import Boundary
from ...planner import ActionKind


@dataclass
class Candidate:
    """
    class Candidate

    A boundary visited at step t with its current-segment score S_c and the
    penalized score. Step 0 is the initial boundary and has no action.
    """

    step: int
    boundary: Boundary
    score: float
    penalized_score: float
    action: ActionKind | None = None
    amplitude: int | None = None
