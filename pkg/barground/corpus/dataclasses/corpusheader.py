"""
module barground.corpus.dataclasses.corpusheader

Contains the definition of the CorpusHeader class
"""

from dataclasses import dataclass

from dataclasses_json import dataclass_json, Undefined


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class CorpusHeader:
    """
    class CorpusHeader

    The format version, sample count and feature dimension that open every
    corpus file
    """

    format_version: int
    sample_count: int
    feature_dim: int
