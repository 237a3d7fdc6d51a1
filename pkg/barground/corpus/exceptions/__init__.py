"""
module barground.corpus.exceptions

Contains all definitions of exceptions thrown while generating, reading or
validating corpora
"""

from .corpusexception import CorpusException
from .corpusparseexception import CorpusParseException
from .corpusvalidationexception import CorpusValidationException
