"""
module barground.inference.enums

Contains the enumerations used by grounding and evaluation
"""

from .baseline import Baseline
