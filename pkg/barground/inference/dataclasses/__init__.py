"""
module barground.inference.dataclasses

Contains the results of grounding and evaluation and the records of a trace
file
"""

from .candidate import Candidate
from .evaluationreport import EvaluationReport
from .groundingresult import GroundingResult
from .traceheader import TraceHeader
from .tracerow import TraceRow
