"""
module barground.autodiff.layers

Contains the parameterized building blocks shared by the extractor, evaluator
and planner networks
"""

from .embedding import Embedding
from .grucell import GRUCell
from .linear import Linear
