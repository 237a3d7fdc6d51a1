"""
module barground.inference.dataclasses.tracerow

Contains the definition of the TraceRow class, one step of a trace file
"""

from dataclasses import dataclass
from typing import Optional

from dataclasses_json import dataclass_json, Undefined


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class TraceRow:
    """
    class TraceRow

    One visited boundary [start, end). action and amplitude are null for the
    initial boundary (t = 0). best flags the predicted segment.
    """

    t: int
    start: int
    end: int
    action: Optional[str]
    amplitude: Optional[int]
    score: float
    penalized_score: float
    best: bool
