"""
module barground.inference.exceptions.traceexception

Contains the definition of the TraceException class, an exception that is
thrown whenever a trajectory trace cannot be written or read back
"""

from ...bargroundexception import BarGroundException


class TraceException(BarGroundException):
    """
    class TraceException

    An exception that is thrown whenever a trace file cannot be written or
    parsed. The message names the file.
    """
