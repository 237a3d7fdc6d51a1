"""
module barground.autodiff.exceptions.dimensionexception

Contains the definition of the DimensionException class, an exception that is
thrown whenever the shapes of the operands of a tensor operation do not agree
"""

from .autodiffexception import AutodiffException


class DimensionException(AutodiffException):
    """
    class DimensionException

    An exception that is thrown whenever the shapes of the operands of a
    tensor operation do not agree
    """
