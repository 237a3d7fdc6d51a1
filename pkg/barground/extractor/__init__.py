"""
module barground.extractor

Contains the context-aware feature extractor: boundaries over a clip sequence,
the left/current/right partition they induce and the GRU query encoder
"""

from .boundary import Boundary
from .queryencoder import QueryEncoder
from .queryencoding import QueryEncoding
from .segmentpartition import SegmentPartition, partition
