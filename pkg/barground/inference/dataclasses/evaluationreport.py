"""
module barground.inference.dataclasses.evaluationreport

Contains the definition of the EvaluationReport class, the metrics of a model
over a test corpus
"""

from dataclasses import dataclass, field
from typing import Dict, Optional

from dataclasses_json import dataclass_json

from ...tables import RecordSet


@dataclass_json
@dataclass
class EvaluationReport:
    """
    class EvaluationReport

    recall maps each threshold chi, formatted with :g, to the fraction of
    queries whose predicted segment has tIoU > chi with the ground truth.
    correlation is the Pearson correlation between S_c and tIoU over every
    visited boundary (None when it is undefined). Samples without a
    ground-truth segment are counted in skipped.
    """

    recall: Dict[str, float] = field(default_factory=dict)
    mean_iou: float = 0.0
    mean_seconds: float = 0.0
    correlation: Optional[float] = None
    evaluated: int = 0
    skipped: int = 0
    max_candidates: int = 0

    def recall_record_set(self: "EvaluationReport") -> RecordSet:
        return RecordSet(
            columns=["threshold", "recall"],
            records=[
                (f"tIoU@{threshold}", f"{100.0 * value:.2f}%")
                for threshold, value in self.recall.items()
            ],
        )

    def summary_record_set(self: "EvaluationReport") -> RecordSet:
        return RecordSet(
            columns=["metric", "value"],
            records=[
                ("mean tIoU", f"{self.mean_iou:.4f}"),
                ("seconds per query", f"{self.mean_seconds:.4f}"),
                (
                    "score/tIoU correlation",
                    "n/a" if self.correlation is None else f"{self.correlation:.4f}",
                ),
                ("candidates per query", str(self.max_candidates)),
                ("queries evaluated", str(self.evaluated)),
                ("queries skipped", str(self.skipped)),
            ],
        )
