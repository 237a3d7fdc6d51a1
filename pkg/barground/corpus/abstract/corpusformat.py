"""
module barground.corpus.abstract.corpusformat

Contains the definition of the CorpusFormat class, the interface shared by the
binary and JSON-lines corpus file formats
"""

from abc import ABCMeta, abstractmethod
from typing import List

from ..dataclasses import GroundingSample


class CorpusFormat(metaclass=ABCMeta):
    """
    class CorpusFormat

    Reads and writes whole corpora in one file format. Implementations only
    check that a file is well-formed; corpus invariants are checked by the
    caller.
    """

    def __init__(self: "CorpusFormat") -> None: ...

    @abstractmethod
    def read(self: "CorpusFormat", path: str) -> List[GroundingSample]: ...

    @abstractmethod
    def write(
        self: "CorpusFormat", samples: List[GroundingSample], path: str
    ) -> None: ...
