"""
module barground.trainer.metricslog

Contains the definition of the MetricsLog class, the append-only JSON-lines
metrics file of a run
"""

import logging
from typing import List

from .dataclasses import MetricsRecord
from .exceptions import TrainingException

logger = logging.getLogger(__name__)


class MetricsLog:
    path: str

    def __init__(self: "MetricsLog", path: str) -> None:
        self.path = path

    def append(self: "MetricsLog", record: MetricsRecord) -> None:
        try:
            with open(self.path, "a", encoding="utf-8") as log_file:
                # pylint: disable=no-member
                print(record.to_json(), file=log_file)
        except OSError as exc:
            raise TrainingException(f"Unable to append to metrics log '{self.path}': {exc}") from exc

    def reset(self: "MetricsLog") -> None:
        try:
            with open(self.path, "w", encoding="utf-8"):
                pass
        except OSError as exc:
            raise TrainingException(f"Unable to reset metrics log '{self.path}': {exc}") from exc

    def read(self: "MetricsLog") -> List[MetricsRecord]:
        try:
            with open(self.path, "r", encoding="utf-8") as log_file:
                # pylint: disable=no-member
                return [
                    MetricsRecord.from_json(line)
                    for line in log_file.read().splitlines()
                    if line.strip()
                ]
        except OSError as exc:
            raise TrainingException(f"Unable to read metrics log '{self.path}': {exc}") from exc
