"""
module barground.config

Contains definitions for dataclasses related to configuration of barground
runs
"""

from .ablationconfig import AblationConfig, FIXED_AMPLITUDE_CHOICES
from .corpusconfig import CorpusConfig
from .inferenceconfig import InferenceConfig
from .initboundary import InitBoundary
from .modelconfig import ModelConfig
from .runconfig import RunConfig
from .tablebackendtype import TableBackendType
from .trainconfig import TrainConfig
