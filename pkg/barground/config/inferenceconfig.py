"""
module barground.config.inferenceconfig

Contains the definition of the InferenceConfig class, the settings of greedy
grounding and its Gaussian length penalty
"""

from dataclasses import dataclass, field
from typing import List

from dataclasses_json import dataclass_json, Undefined

from .. import constants
from .exceptions import ConfigException


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class InferenceConfig:
    """
    class InferenceConfig

    Dataclass holding the penalty length baseline (delta, a fraction of the
    clip count), the penalty modulation (tau), the number of refinement steps
    and the tIoU thresholds to report
    """

    penalty_baseline: float = 0.35
    penalty_modulation: float = 0.5
    max_steps: int = 12
    thresholds: List[float] = field(
        default_factory=lambda: list(constants.DEFAULT_THRESHOLDS)
    )

    def validate(self: "InferenceConfig") -> None:
        # 1.0 is the long-segment profile baseline
        if not 0.0 < self.penalty_baseline <= 1.0:
            raise ConfigException(
                f"penalty_baseline must lie in (0, 1], got {self.penalty_baseline}"
            )
        if self.penalty_modulation <= 0.0:
            raise ConfigException(
                f"penalty_modulation must be positive, got {self.penalty_modulation}"
            )
        if self.max_steps < 1:
            raise ConfigException(f"max_steps must be at least 1, got {self.max_steps}")
        if not self.thresholds or any(not 0.0 <= value < 1.0 for value in self.thresholds):
            raise ConfigException(f"thresholds must be values in [0, 1), got {self.thresholds}")
