"""
module barground.extractor.queryencoding

Contains the definition of the QueryEncoding class
"""

from dataclasses import dataclass
from typing import List

from ..autodiff import Tensor


@dataclass
class QueryEncoding:
    """
    class QueryEncoding

    The final GRU hidden state E that summarizes a query, plus the hidden state
    after every token (kept for debugging)
    """

    final: Tensor
    states: List[Tensor]
