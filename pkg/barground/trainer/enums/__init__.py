"""
module barground.trainer.enums

Contains the enumerations used by the training loop
"""

from .trainingphase import TrainingPhase
