from dataclasses import dataclass

from ...autodiff import Tensor


@dataclass
class Attention:
    """
    class Attention

    Attention weights a over the clips of a segment and the attended feature
    A = sum_i a_i theta(F_i)
    """

    weights: Tensor
    attended: Tensor
