"""
module barground.autodiff.graphmode

Contains the switches that control whether operations record a graph for
backward() and whether layers run in training mode (dropout on) or eval mode.
Both switches are thread-local so evaluation workers never see each other's
mode changes.
"""

from contextlib import contextmanager
import threading
from typing import Iterator


class _GraphMode(threading.local):
    # class attributes act as the per-thread defaults
    grad_enabled: bool = True
    training: bool = False


_mode: _GraphMode = _GraphMode()


def is_grad_enabled() -> bool:
    return _mode.grad_enabled


def is_training() -> bool:
    return _mode.training


def set_training(training: bool) -> None:
    """
    Sets the train/eval mode flag for the calling thread

    Args:
        training (bool): True to enable dropout, False for eval mode

    Returns:
        Nothing

    Raises:
        Nothing
    """

    _mode.training = training


@contextmanager
def no_grad() -> Iterator[None]:
    previous: bool = _mode.grad_enabled
    _mode.grad_enabled = False
    try:
        yield
    finally:
        _mode.grad_enabled = previous


@contextmanager
def _training_as(training: bool) -> Iterator[None]:
    previous: bool = _mode.training
    _mode.training = training
    try:
        yield
    finally:
        _mode.training = previous


def eval_mode():
    return _training_as(False)


def train_mode():
    return _training_as(True)
