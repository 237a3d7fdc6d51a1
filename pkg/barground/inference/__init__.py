"""
module barground.inference

Contains greedy grounding with the Gaussian length penalty, the tIoU metric,
corpus evaluation, the reference baselines and trajectory traces
"""

from .dataclasses import Candidate, EvaluationReport, GroundingResult, TraceHeader, TraceRow
from .enums import Baseline
from .evaluation import evaluate
from .grounding import best_candidate_index, ground, ground_center
from .penalty import penalize
from .tiou import temporal_iou
from .trace import export_trace, read_trace, trace_file_name
