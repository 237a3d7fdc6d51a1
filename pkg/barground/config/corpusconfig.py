"""
module barground.config.corpusconfig

Contains the definition of the CorpusConfig class, the parameters of a
synthetic planted-segment corpus
"""

from dataclasses import dataclass

from dataclasses_json import dataclass_json, Undefined

from .exceptions import ConfigException


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class CorpusConfig:
    """
    class CorpusConfig

    Dataclass holding the size, shape and signal strength of a synthetic corpus
    """

    num_samples: int = 500
    clip_count_min: int = 40
    clip_count_max: int = 80
    feature_dim: int = 64
    vocab_size: int = 100
    query_length_min: int = 3
    query_length_max: int = 8
    segment_fraction_min: float = 0.15
    segment_fraction_max: float = 0.4
    signal_to_noise: float = 2.0
    seed: int = 0

    def validate(self: "CorpusConfig") -> None:
        """
        Checks that every range is non-empty and every count is usable

        Args:
            None

        Returns:
            Nothing

        Raises:
            ConfigException: If a range is degenerate or a value is out of range
        """

        if self.num_samples < 1:
            raise ConfigException(f"num_samples must be positive, got {self.num_samples}")
        if not 4 <= self.clip_count_min <= self.clip_count_max:
            raise ConfigException(
                f"Clip count range [{self.clip_count_min}, {self.clip_count_max}] must be "
                "non-empty with a minimum of at least 4 clips"
            )
        if self.feature_dim < 1 or self.vocab_size < 1:
            raise ConfigException("feature_dim and vocab_size must be positive")
        if not 1 <= self.query_length_min <= self.query_length_max:
            raise ConfigException(
                f"Query length range [{self.query_length_min}, {self.query_length_max}] "
                "must be non-empty and start at 1 or more"
            )
        if not 0.0 < self.segment_fraction_min <= self.segment_fraction_max < 1.0:
            raise ConfigException(
                f"Segment fraction range [{self.segment_fraction_min}, "
                f"{self.segment_fraction_max}] must satisfy 0 < min <= max < 1"
            )
        if self.signal_to_noise < 0.0:
            raise ConfigException(
                f"signal_to_noise must not be negative, got {self.signal_to_noise}"
            )
