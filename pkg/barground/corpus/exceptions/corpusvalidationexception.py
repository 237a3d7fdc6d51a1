"""
module barground.corpus.exceptions.corpusvalidationexception

Contains the definition of the CorpusValidationException class, an exception
that is thrown whenever a well-formed sample violates a corpus invariant
"""

from .corpusexception import CorpusException


class CorpusValidationException(CorpusException):
    """
    class CorpusValidationException

    An exception that is thrown whenever a sample violates a corpus invariant.
    The message names the offending sample.
    """
