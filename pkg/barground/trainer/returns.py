"""
module barground.trainer.returns

Contains q_returns(), the k-step discounted returns of an episode
"""

import numpy as np

from ..autodiff.exceptions import ContractException


def q_returns(rewards: np.ndarray, values: np.ndarray, discount: float) -> np.ndarray:
    """
    Computes Q_t = sum_l discount^l r_{t+l} + discount^k v_{t+k} with k the number
    of steps left in the episode. The episode ends at T_max, so the bootstrap
    value beyond the horizon is 0 and values only fix the expected length.

    Args:
        rewards (np.ndarray): r_1..r_T
        values (np.ndarray): v(s_1)..v(s_T)
        discount (float): gamma in [0, 1]

    Returns:
        np.ndarray: Q_1..Q_T

    Raises:
        ContractException: If rewards and values differ in length
    """

    if len(rewards) != len(values):
        raise ContractException(
            f"Got {len(rewards)} rewards but {len(values)} values"
        )

    returns: np.ndarray = np.zeros(len(rewards))
    running: float = 0.0
    for step in reversed(range(len(rewards))):
        running = float(rewards[step]) + discount * running
        returns[step] = running

    return returns
