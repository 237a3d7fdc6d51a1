"""
module barground.bargroundexception

Contains the definition of the BarGroundException class, the parent of all
exceptions directly thrown by barground and its subpackages
"""


class BarGroundException(RuntimeError):
    """
    class BarGroundException

    The parent class of all exceptions directly thrown by barground
    """
