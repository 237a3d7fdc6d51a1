"""
module barground.trainer.exceptions

Contains all definitions of exceptions thrown while training
"""

from .divergenceexception import DivergenceException
from .trainingexception import TrainingException
