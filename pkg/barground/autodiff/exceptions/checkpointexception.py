"""
module barground.autodiff.exceptions.checkpointexception

Contains the definition of the CheckpointException class, an exception that is
thrown whenever a parameter checkpoint cannot be read, written or applied
"""

from .autodiffexception import AutodiffException


class CheckpointException(AutodiffException):
    """
    class CheckpointException

    An exception that is thrown whenever a parameter checkpoint cannot be
    read, written or applied to a model
    """
