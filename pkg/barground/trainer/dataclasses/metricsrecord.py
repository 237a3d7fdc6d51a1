"""
module barground.trainer.dataclasses.metricsrecord

Contains the definition of the MetricsRecord class, one line of a run's
metrics log
"""

from dataclasses import dataclass, fields
from typing import Dict, List, Optional, Tuple

from dataclasses_json import dataclass_json

from ...tables import RecordSet
from ..enums import TrainingPhase


@dataclass_json
@dataclass
class MetricsRecord:
    """
    class MetricsRecord

    The losses of one iteration. Terms that the phase does not compute are
    null; eval fields are only set on evaluation iterations.
    """

    iteration: int
    phase: TrainingPhase
    loss: float
    grad_norm: float
    inter_loss: Optional[float] = None
    intra_loss: Optional[float] = None
    a2c_loss: Optional[float] = None
    mean_reward: Optional[float] = None
    eval_tiou: Optional[Dict[str, float]] = None
    eval_mean_tiou: Optional[float] = None

    def to_record_set(self: "MetricsRecord") -> RecordSet:
        records: List[Tuple[str, str]] = []
        for record_field in fields(self):
            value = getattr(self, record_field.name)
            match value:
                case None:
                    continue
                case dict():
                    records.extend(
                        (f"eval tIoU@{threshold}", f"{100.0 * recall:.2f}%")
                        for threshold, recall in value.items()
                    )
                case float():
                    records.append((record_field.name, f"{value:.6f}"))
                case _:
                    records.append((record_field.name, str(value)))

        return RecordSet(columns=["field", "value"], records=records)
