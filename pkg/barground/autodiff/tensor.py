"""
module barground.autodiff.tensor

Contains the definition of the Tensor class, a dense float64 value that records
the operation which produced it, and of backward(), the reverse-mode sweep that
fills in gradients
"""

from typing import Dict, List, Tuple

import numpy as np

from .exceptions import ContractException


class Tensor:
    """
    class Tensor

    A dense multi-dimensional float64 value that participates in reverse-mode
    differentiation. Scalars are 0-d tensors with shape ().
    """

    data: np.ndarray
    grad: np.ndarray | None
    requires_grad: bool
    graph_node: "Function | None"

    def __init__(self: "Tensor", data, requires_grad: bool = False) -> None:
        self.data = np.asarray(data, dtype=np.float64)
        self.grad = None
        self.requires_grad = requires_grad
        self.graph_node = None

    def __repr__(self: "Tensor") -> str:
        return (
            f"Tensor(shape={self.shape}, requires_grad={self.requires_grad}, "
            f"data={np.array2string(self.data, precision=4, threshold=8)})"
        )

    @property
    def ndim(self: "Tensor") -> int:
        return self.data.ndim

    @property
    def shape(self: "Tensor") -> Tuple[int, ...]:
        return self.data.shape

    @property
    def size(self: "Tensor") -> int:
        return self.data.size

    def backward(self: "Tensor") -> None:
        backward(self)

    def detach(self: "Tensor") -> "Tensor":
        return Tensor(self.data)

    def item(self: "Tensor") -> float:
        return float(self.data.item())

    def numpy(self: "Tensor") -> np.ndarray:
        return self.data

    def zero_grad(self: "Tensor") -> None:
        self.grad = None

    def __add__(self: "Tensor", other) -> "Tensor":
        return ops.add(self, as_tensor(other))

    def __radd__(self: "Tensor", other) -> "Tensor":
        return ops.add(as_tensor(other), self)

    def __sub__(self: "Tensor", other) -> "Tensor":
        return ops.sub(self, as_tensor(other))

    def __rsub__(self: "Tensor", other) -> "Tensor":
        return ops.sub(as_tensor(other), self)

    def __mul__(self: "Tensor", other) -> "Tensor":
        if isinstance(other, (int, float)):
            return ops.scale(self, float(other))

        return ops.mul(self, as_tensor(other))

    def __rmul__(self: "Tensor", other) -> "Tensor":
        return self.__mul__(other)

    def __truediv__(self: "Tensor", other: float) -> "Tensor":
        if not isinstance(other, (int, float)):
            raise ContractException("Tensors may only be divided by a python scalar")

        return ops.scale(self, 1.0 / float(other))

    def __neg__(self: "Tensor") -> "Tensor":
        return ops.scale(self, -1.0)

    def __matmul__(self: "Tensor", other: "Tensor") -> "Tensor":
        return ops.matmul(self, other)


def as_tensor(value) -> Tensor:
    if isinstance(value, Tensor):
        return value

    return Tensor(value)


def _topological_order(root: Tensor) -> List[Tensor]:
    # iterative post-order walk so deep recurrent graphs never hit the
    # interpreter recursion limit. inputs always precede their outputs
    order: List[Tensor] = []
    visited: set[int] = set()
    stack: List[Tuple[Tensor, bool]] = [(root, False)]

    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in visited:
            continue

        visited.add(id(node))
        stack.append((node, True))
        if node.graph_node is not None:
            for parent in node.graph_node.inputs:
                if parent.requires_grad and id(parent) not in visited:
                    stack.append((parent, False))

    return order


def backward(loss: Tensor) -> None:
    """
    Propagates d(loss)/d(node) to every tensor reachable from loss that requires
    a gradient. Gradients accumulate into .grad across calls until zeroed.

    Args:
        loss (Tensor): A tensor holding exactly one element

    Returns:
        Nothing

    Raises:
        ContractException: If loss is not a scalar
    """

    if loss.size != 1:
        raise ContractException(
            f"backward() requires a scalar loss but received shape {loss.shape}"
        )
    if not loss.requires_grad:
        return

    order: List[Tensor] = _topological_order(loss)
    pending: Dict[int, np.ndarray] = {id(loss): np.ones_like(loss.data)}

    for node in reversed(order):
        node_grad: np.ndarray | None = pending.pop(id(node), None)
        if node_grad is None:
            continue

        node.grad = node_grad.copy() if node.grad is None else node.grad + node_grad
        if node.graph_node is None:
            continue

        for parent, parent_grad in zip(
            node.graph_node.inputs, node.graph_node.backward(node_grad)
        ):
            if parent_grad is None or not parent.requires_grad:
                continue

            key: int = id(parent)
            pending[key] = (
                parent_grad if key not in pending else pending[key] + parent_grad
            )


# pylint: disable=wrong-import-position
from . import ops
from .function import Function
