from dataclasses import dataclass

from .metricsrecord import MetricsRecord


@dataclass
class TrainingSummary:
    iterations: int
    checkpoint_path: str
    last_record: MetricsRecord | None
