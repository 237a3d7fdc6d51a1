"""
module barground.planner.enums

Contains the enumerations used by the adaptive action planner
"""

from .actionkind import ActionKind
from .rolloutmode import RolloutMode
