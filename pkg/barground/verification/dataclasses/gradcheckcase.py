"""
module barground.verification.dataclasses.gradcheckcase

Contains the definition of the GradcheckCase class
"""

from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np

from ...autodiff import Tensor

LossBuilder = Callable[[np.random.Generator], Tuple[Callable[[], Tensor], List[Tensor]]]


@dataclass(frozen=True)
class GradcheckCase:
    """
    class GradcheckCase

    A named gradient check. build() draws the inputs and parameters from the
    generator and returns a closure computing a scalar loss from them together
    with the tensors to differentiate with respect to.
    """

    name: str
    build: LossBuilder
    description: str = ""
