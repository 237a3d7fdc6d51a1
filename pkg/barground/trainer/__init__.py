"""
module barground.trainer

Contains the optimization engine: discounted returns, the actor-critic and
ranking losses, the alternating trainer and its metrics log
"""

from .dataclasses import MetricsRecord, TrainingSummary
from .enums import TrainingPhase
from .losses import a2c_loss, inter_loss, intra_loss, rank_loss
from .metricslog import MetricsLog
from .returns import q_returns
from .trainer import Trainer
