"""
module barground.extractor.exceptions

Contains all definitions of exceptions thrown by the context-aware feature
extractor
"""

from .invalidtokenexception import InvalidTokenException
