"""
module barground.corpus.exceptions.corpusparseexception

Contains the definition of the CorpusParseException class, an exception that
is thrown whenever a corpus file does not conform to its format
"""

from .corpusexception import CorpusException


class CorpusParseException(CorpusException):
    """
    class CorpusParseException

    An exception that is thrown whenever a corpus file is malformed. Carries
    the line (text formats) or byte offset (binary format) of the failure.
    """

    line: int | None
    offset: int | None

    def __init__(
        self: "CorpusParseException",
        message: str,
        line: int | None = None,
        offset: int | None = None,
    ) -> None:
        location: str = ""
        if line is not None:
            location = f" (line {line})"
        elif offset is not None:
            location = f" (byte offset {offset})"

        super().__init__(message + location)
        self.line = line
        self.offset = offset
