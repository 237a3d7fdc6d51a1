"""
module barground.autodiff.exceptions.contractexception

Contains the definition of the ContractException class, an exception that is
thrown whenever a caller violates the precondition of an operation (for example,
calling backward() on a non-scalar tensor)
"""

from .autodiffexception import AutodiffException


class ContractException(AutodiffException):
    """
    class ContractException

    An exception that is thrown whenever a caller violates the precondition
    of an operation
    """
