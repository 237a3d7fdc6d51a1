"""
module barground.inference.exceptions

Contains all definitions of exceptions thrown by grounding and evaluation
"""

from .traceexception import TraceException
