"""
module barground.trainer.exceptions.trainingexception

Contains the definition of the TrainingException class which is the parent
class of all exceptions thrown by the training loop
"""

from ...bargroundexception import BarGroundException


class TrainingException(BarGroundException):
    """
    class TrainingException

    Parent class of all exceptions thrown by the training loop
    """
