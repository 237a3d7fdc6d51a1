"""
module barground.evaluator.dataclasses

Contains the values produced by the cross-modal alignment evaluator
"""

from .alignmentscores import AlignmentScores
from .attention import Attention
