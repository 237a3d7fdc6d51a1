"""
module barground.extractor.exceptions.invalidtokenexception

Contains the definition of the InvalidTokenException class, an exception that
is thrown whenever a query holds a token id outside the vocabulary
"""

from ...bargroundexception import BarGroundException


class InvalidTokenException(BarGroundException):
    """
    class InvalidTokenException

    An exception that is thrown whenever a query holds a token id outside
    the vocabulary of the embedding table
    """
