"""
module barground.corpus.dataclasses

Contains the sample types held by a corpus and the records they are
serialized through
"""

from .corpusheader import CorpusHeader
from .groundingsample import GroundingSample
from .samplerecord import SampleRecord
from .selfcheckreport import SelfCheckReport
from .trainingsample import TrainingSample
