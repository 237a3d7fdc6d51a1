"""
module barground.evaluator

Contains the cross-modal alignment evaluator, its scores and the sign reward
"""

from .alignmentevaluator import AlignmentEvaluator
from .dataclasses import AlignmentScores, Attention
from .filterlayer import FilterLayer
from .reward import sign_reward
