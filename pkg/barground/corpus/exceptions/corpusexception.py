"""
module barground.corpus.exceptions.corpusexception

Contains the definition of the CorpusException class which is the parent
class of all exceptions thrown by corpus readers and writers
"""

from ...bargroundexception import BarGroundException


class CorpusException(BarGroundException):
    """
    class CorpusException

    Parent class of all exceptions thrown by corpus readers and writers
    """
