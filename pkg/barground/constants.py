"""
module barground.constants

Contains definitions for constant values referenced throughout
barground
"""

from typing import Tuple

from barground import __version__

APPLICATION_NAME: str = __name__[: __name__.index(".")]
APPLICATION_VERSION: str = __version__

COMMAND_SUGGESTION_MAX_DISTANCE: int = 5

CONFIG_VERSION: str = "0.1"
CHECKPOINT_FORMAT_VERSION: int = 1
CORPUS_FORMAT_VERSION: int = 1
TRACE_SCHEMA_VERSION: int = 1

ENV_RUN_DIR: str = "BARGROUND_RUN_DIR"

CHECKPOINT_FILE_NAME: str = "checkpoint.npz"
CONFIG_FILE_NAME: str = "config.json"
DIVERGENCE_FILE_NAME: str = "divergence.json"
METRICS_FILE_NAME: str = "metrics.jsonl"

EXIT_SUCCESS: int = 0
EXIT_FAILURE: int = 1
EXIT_USAGE: int = 2

# gradient checks
GRADCHECK_STEP: float = 1e-5
GRADCHECK_TOLERANCE: float = 1e-4

# the empty-segment alignment score (the minimum cosine)
EMPTY_SEGMENT_SCORE: float = -1.0

ACTION_COUNT: int = 4
AMPLITUDE_BASE: int = 10

DEFAULT_THRESHOLDS: Tuple[float, ...] = (0.3, 0.5, 0.7)

# penalty baselines for the short-segment and long-segment corpus profiles
PROFILE_PENALTY_BASELINES: dict[str, float] = {"short": 0.35, "long": 1.0}
