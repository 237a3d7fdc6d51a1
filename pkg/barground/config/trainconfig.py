"""
module barground.config.trainconfig

Contains the definition of the TrainConfig class, the optimization settings
of the alternating ranking/actor-critic schedule
"""

from dataclasses import dataclass

from dataclasses_json import dataclass_json, Undefined

from .exceptions import ConfigException


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class TrainConfig:
    """
    class TrainConfig

    Dataclass holding every training hyper-parameter. half_period is the
    number of iterations K spent in each phase before switching.
    """

    batch_size: int = 12
    lr: float = 0.001
    margin: float = 0.2
    entropy_weight: float = 0.1
    discount: float = 0.4
    rank_weight: float = 1.0
    intra_weight: float = 0.1
    half_period: int = 500
    max_steps: int = 12
    total_iterations: int = 6000
    seed: int = 0
    grad_clip: float = 5.0
    adam_beta1: float = 0.9
    adam_beta2: float = 0.999
    adam_eps: float = 1e-8
    eval_every: int = 0
    train_fraction: float = 0.8
    encoder_in_a2c: bool = False
    joint_update: bool = False

    def validate(self: "TrainConfig") -> None:
        """
        Checks every training hyper-parameter against its legal range

        Args:
            None

        Returns:
            Nothing

        Raises:
            ConfigException: If any value is out of range
        """

        if self.batch_size < 2:
            raise ConfigException(
                f"batch_size must be at least 2 for in-batch negatives, got {self.batch_size}"
            )
        for name in ("lr", "margin", "entropy_weight", "rank_weight", "intra_weight", "grad_clip"):
            if getattr(self, name) < 0.0:
                raise ConfigException(f"{name} must not be negative, got {getattr(self, name)}")
        if not 0.0 <= self.discount <= 1.0:
            raise ConfigException(f"discount must lie in [0, 1], got {self.discount}")
        if self.half_period < 1:
            raise ConfigException(f"half_period must be at least 1, got {self.half_period}")
        if self.max_steps < 1:
            raise ConfigException(f"max_steps must be at least 1, got {self.max_steps}")
        if self.total_iterations < 0 or self.eval_every < 0:
            raise ConfigException("total_iterations and eval_every must not be negative")
        if not 0.0 < self.train_fraction < 1.0:
            raise ConfigException(
                f"train_fraction must lie in (0, 1), got {self.train_fraction}"
            )
        if not (0.0 <= self.adam_beta1 < 1.0 and 0.0 <= self.adam_beta2 < 1.0):
            raise ConfigException("Adam betas must lie in [0, 1)")
