"""
module barground.autodiff.function

Contains the definition of the Function class, the abstract base class of every
differentiable operation. A Function instance is the graph node that links an
output tensor back to its inputs.
"""

from abc import ABCMeta, abstractmethod
from typing import Tuple, Type

import numpy as np

from .graphmode import is_grad_enabled
from .tensor import Tensor


class Function(metaclass=ABCMeta):
    """
    class Function

    Abstract base class of every differentiable operation. Subclasses implement
    forward() over numpy arrays and backward(), which maps the gradient of the
    output to one gradient (or None) per input.
    """

    inputs: Tuple[Tensor, ...]

    def __init__(self: "Function", *inputs: Tensor) -> None:
        self.inputs = inputs

    @classmethod
    def apply(cls: Type["Function"], *inputs: Tensor, **kwargs) -> Tensor:
        """
        Runs the forward pass of this operation and, when gradients are enabled
        and any input requires one, records the graph node on the output

        Args:
            *inputs (Tensor): The operands of the operation
            **kwargs: Operation-specific constants passed to the constructor

        Returns:
            Tensor: The output of the operation

        Raises:
            DimensionException: If the operand shapes are not compatible
        """

        function: Function = cls(*inputs, **kwargs)
        output: Tensor = Tensor(function.forward(*(tensor.data for tensor in inputs)))

        if is_grad_enabled() and any(tensor.requires_grad for tensor in inputs):
            output.requires_grad = True
            output.graph_node = function

        return output

    @abstractmethod
    def forward(self: "Function", *arrays: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def backward(
        self: "Function", grad: np.ndarray
    ) -> Tuple[np.ndarray | None, ...]: ...
