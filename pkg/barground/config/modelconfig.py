"""
module barground.config.modelconfig

Contains the definition of the ModelConfig class, the sizes of the grounding
network
"""

from dataclasses import dataclass

from dataclasses_json import dataclass_json, Undefined

from .exceptions import ConfigException


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class ModelConfig:
    """
    class ModelConfig

    Dataclass holding the network sizes. vocab_size and feature_dim are taken
    from the corpus when a model is trained.
    """

    hidden_size: int = 1024
    embedding_dim: int = 64
    dropout_rate: float = 0.5
    vocab_size: int = 100
    feature_dim: int = 64

    def validate(self: "ModelConfig") -> None:
        for name in ("hidden_size", "embedding_dim", "vocab_size", "feature_dim"):
            if getattr(self, name) < 1:
                raise ConfigException(f"{name} must be positive, got {getattr(self, name)}")

        if not 0.0 <= self.dropout_rate < 1.0:
            raise ConfigException(f"dropout_rate must lie in [0, 1), got {self.dropout_rate}")
