"""
module barground.autodiff.gradcheck

Contains the central finite-difference gradient checker and the fault
injection used to prove that the checker catches a broken backward()
"""

from contextlib import contextmanager
from typing import Callable, Iterator, Sequence, Tuple, Type

import numpy as np

from ..constants import GRADCHECK_STEP
from .function import Function
from .graphmode import no_grad
from .tensor import Tensor


def numerical_gradient(
    loss_fn: Callable[[], Tensor], target: Tensor, step: float = GRADCHECK_STEP
) -> np.ndarray:
    """
    Estimates d(loss)/d(target) by central differences, perturbing target in place
    one element at a time

    Args:
        loss_fn (Callable[[], Tensor]): Rebuilds the scalar loss from the current
            tensor values
        target (Tensor): The tensor to differentiate with respect to
        step (float): The finite-difference step h

    Returns:
        np.ndarray: The estimated gradient, shaped like target

    Raises:
        Nothing
    """

    target.data = np.array(target.data, dtype=np.float64)
    flat: np.ndarray = target.data.reshape(-1)
    estimate: np.ndarray = np.zeros_like(flat)

    with no_grad():
        for position in range(flat.shape[0]):
            original: float = flat[position]

            flat[position] = original + step
            upper: float = loss_fn().item()
            flat[position] = original - step
            lower: float = loss_fn().item()
            flat[position] = original

            estimate[position] = (upper - lower) / (2.0 * step)

    return estimate.reshape(target.shape)


def relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    difference: float = float(np.linalg.norm(analytic - numeric))
    scale: float = max(float(np.linalg.norm(analytic)), float(np.linalg.norm(numeric)))
    return difference / max(scale, 1e-12)


def check_gradients(
    loss_fn: Callable[[], Tensor],
    targets: Sequence[Tensor],
    step: float = GRADCHECK_STEP,
) -> float:
    """
    Compares backward() gradients of loss_fn against central differences for
    every target tensor

    Args:
        loss_fn (Callable[[], Tensor]): Builds the scalar loss from the targets
        targets (Sequence[Tensor]): Tensors that require a gradient
        step (float): The finite-difference step h

    Returns:
        float: The largest relative error over all targets

    Raises:
        ContractException: If loss_fn does not return a scalar
    """

    for target in targets:
        target.requires_grad = True
        target.zero_grad()

    loss_fn().backward()
    analytic: Tuple[np.ndarray, ...] = tuple(
        np.zeros_like(target.data) if target.grad is None else target.grad.copy()
        for target in targets
    )

    worst: float = 0.0
    for target, gradient in zip(targets, analytic):
        worst = max(worst, relative_error(gradient, numerical_gradient(loss_fn, target, step)))

    return worst


@contextmanager
def broken_backward(function_cls: Type[Function], factor: float = 1.5) -> Iterator[None]:
    """
    Temporarily scales every gradient produced by function_cls.backward() by
    factor, so that gradient checks over that operation must fail
    """

    original = function_cls.backward

    def scaled_backward(self, grad):
        return tuple(
            None if value is None else value * factor for value in original(self, grad)
        )

    function_cls.backward = scaled_backward
    try:
        yield
    finally:
        function_cls.backward = original
