"""
module barground.corpus.backends

Contains the definitions of all supported corpus file formats
"""

from typing import Dict, Type

from ..abstract import CorpusFormat

from . import binary
from . import jsonlines

corpus_formats_by_suffix: Dict[str, Type[CorpusFormat]] = {
    ".bin": binary.BinaryCorpusFormat,
    ".jsonl": jsonlines.JsonLinesCorpusFormat,
}
