"""
module barground.trainer.dataclasses

Contains the records produced by the training loop
"""

from .metricsrecord import MetricsRecord
from .trainingsummary import TrainingSummary
