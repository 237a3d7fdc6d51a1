"""
module barground.config.ablationconfig

Contains the definition of the AblationConfig class, the switches that turn
the full model into each of its ablated variants
"""

from dataclasses import dataclass
from typing import Optional

from dataclasses_json import dataclass_json, Undefined

from .exceptions import ConfigException
from .initboundary import InitBoundary

FIXED_AMPLITUDE_CHOICES: tuple[int, ...] = (5, 10, 15)


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class AblationConfig:
    """
    class AblationConfig

    Dataclass of ablation switches. The defaults describe the full model.
    """

    no_context: bool = False
    no_intra: bool = False
    fixed_amplitude: Optional[int] = None
    random_reward: bool = False
    stop_threshold: Optional[float] = None
    no_penalty: bool = False
    init_boundary: InitBoundary = InitBoundary.QUARTER
    tie_reward: int = -1

    def validate(self: "AblationConfig") -> None:
        if self.fixed_amplitude is not None and self.fixed_amplitude not in FIXED_AMPLITUDE_CHOICES:
            raise ConfigException(
                f"fixed_amplitude must be one of {FIXED_AMPLITUDE_CHOICES} or null, "
                f"got {self.fixed_amplitude}"
            )
        if self.tie_reward not in (-1, 0):
            raise ConfigException(f"tie_reward must be -1 or 0, got {self.tie_reward}")
        if self.stop_threshold is not None and not -1.0 <= self.stop_threshold <= 1.0:
            raise ConfigException(
                f"stop_threshold must lie in [-1, 1], got {self.stop_threshold}"
            )
