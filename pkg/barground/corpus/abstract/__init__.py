"""
module barground.corpus.abstract

Contains the abstract base class implemented by every corpus file format
"""

from .corpusformat import CorpusFormat
