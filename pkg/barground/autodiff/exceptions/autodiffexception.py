"""
module barground.autodiff.exceptions.autodiffexception

Contains the definition of the AutodiffException class, the parent class of all
exceptions thrown by the automatic differentiation core
"""

from ...bargroundexception import BarGroundException


class AutodiffException(BarGroundException):
    """
    class AutodiffException

    The parent class of all exceptions thrown by the automatic
    differentiation core
    """
