"""
module barground.autodiff.ops.broadcast

Contains the shape helpers shared by the elementwise operations. Broadcasting is
limited to leading-dimension expansion: one operand's shape must be a suffix of
the other's.
"""

from typing import Tuple

import numpy as np

from ..exceptions import DimensionException


def broadcast_shape(left: Tuple[int, ...], right: Tuple[int, ...]) -> Tuple[int, ...]:
    if left == right:
        return left
    if len(left) <= len(right) and right[len(right) - len(left) :] == left:
        return right
    if len(right) < len(left) and left[len(left) - len(right) :] == right:
        return left

    raise DimensionException(f"Shapes {left} and {right} are not broadcast-compatible")


def unbroadcast(grad: np.ndarray, shape: Tuple[int, ...]) -> np.ndarray:
    if grad.shape == shape:
        return grad

    return grad.sum(axis=tuple(range(grad.ndim - len(shape)))).reshape(shape)
