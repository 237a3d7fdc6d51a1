"""
module barground.trainer.losses

Contains the training objectives: the actor-critic loss of an episode and the
inter-video, intra-video and combined ranking losses
"""

import math
from typing import List, Sequence

import numpy as np

from ..autodiff import Tensor, ops
from ..autodiff.exceptions import ContractException
from ..config.exceptions import ConfigException
from ..evaluator import AlignmentScores
from ..planner import Trajectory
from .exceptions import DivergenceException
from .returns import q_returns


def _check_finite(term: Tensor, what: str, step: int) -> None:
    if not math.isfinite(term.item()):
        raise DivergenceException(f"{what} is not finite at step {step}", step=step)


def a2c_loss(trajectory: Trajectory, entropy_weight: float, discount: float) -> Tensor:
    """
    Computes L_actor + L_critic for one episode, where

        L_actor  = -sum_t (A_t log pi(a_t | s_t) + alpha H(pi(. | s_t)))
        L_critic = sum_t (Q_t - v_t)^2 / T

    with A_t = Q_t - v_t. Q and v are constants in the actor term; only v
    carries a gradient in the critic term.

    Args:
        trajectory (Trajectory): A sampled episode
        entropy_weight (float): alpha
        discount (float): gamma

    Returns:
        Tensor: The scalar loss

    Raises:
        ContractException: If the episode is empty or was not produced by the
            policy
        DivergenceException: If any term is not finite
    """

    if len(trajectory) == 0:
        raise ContractException("Cannot compute an actor-critic loss of an empty episode")

    values: np.ndarray = trajectory.values
    returns: np.ndarray = q_returns(trajectory.rewards, values, discount)
    actor_terms: List[Tensor] = []
    critic_terms: List[Tensor] = []

    for index, transition in enumerate(trajectory.transitions):
        if transition.log_prob is None or transition.value is None:
            raise ContractException(
                f"Step {transition.step} has no policy output to differentiate"
            )

        advantage: float = float(returns[index] - values[index])
        actor_term: Tensor = transition.log_prob * advantage + transition.entropy * entropy_weight
        critic_error: Tensor = transition.value - float(returns[index])
        critic_term: Tensor = critic_error * critic_error

        _check_finite(actor_term, "actor loss", transition.step)
        _check_finite(critic_term, "critic loss", transition.step)
        actor_terms.append(actor_term)
        critic_terms.append(critic_term)

    actor: Tensor = -ops.sum_all(ops.stack(actor_terms))
    critic: Tensor = ops.sum_all(ops.stack(critic_terms)) / len(critic_terms)
    return actor + critic


def inter_loss(scores: Tensor, margin: float) -> Tensor:
    """
    Computes the inter-video ranking loss of a batch. scores[i, j] is the
    alignment of video i with query j, so the diagonal holds the matched pairs.
    Every off-diagonal entry of a row (query swapped) and of a column (video
    swapped) contributes a hinge [margin + S_neg - S_pos]_+. The sum is averaged
    over the batch.

    Args:
        scores (Tensor): The (B, B) score matrix
        margin (float): epsilon

    Returns:
        Tensor: The scalar loss

    Raises:
        ConfigException: If B is below 2
    """

    if scores.ndim != 2 or scores.shape[0] != scores.shape[1]:
        raise ContractException(f"inter_loss() expects a square matrix, got {scores.shape}")

    batch_size: int = scores.shape[0]
    if batch_size < 2:
        raise ConfigException(
            f"The inter-video ranking loss needs at least 2 pairs per batch, got {batch_size}"
        )

    positives: Tensor = ops.diagonal(scores)
    off_diagonal: Tensor = Tensor(1.0 - np.eye(batch_size))

    # column j of (S - diag) holds S[i, j] - S[j, j]: videos swapped
    video_hinges: Tensor = ops.relu(scores - positives + margin) * off_diagonal
    # column i of (S^T - diag) holds S[i, j] - S[i, i]: queries swapped
    query_hinges: Tensor = ops.relu(ops.transpose(scores) - positives + margin) * off_diagonal

    return (ops.sum_all(query_hinges) + ops.sum_all(video_hinges)) / batch_size


def intra_loss(scores: AlignmentScores, margin: float) -> Tensor:
    """
    Computes the intra-video ranking loss of one boundary state. Each of the
    current, left and right segments whose score strictly exceeds the global
    score is pushed above the other two by margin:

        sum_{x in c,l,r} psi(S_x > S_g) sum_{y != x} [margin + S_y - S_x]_+

    Args:
        scores (AlignmentScores): The four scores of the state
        margin (float): epsilon

    Returns:
        Tensor: The scalar loss (a constant 0 when no indicator is on)

    Raises:
        Nothing
    """

    global_value: float = scores.global_score.item()
    segments: List[Tensor] = [scores.current, scores.left, scores.right]
    hinges: List[Tensor] = []

    for anchor_index, anchor in enumerate(segments):
        if not anchor.item() > global_value:
            continue

        for other_index, other in enumerate(segments):
            if other_index != anchor_index:
                hinges.append(ops.relu(other - anchor + margin))

    if not hinges:
        return Tensor(0.0)

    return ops.sum_all(ops.stack(hinges))


def rank_loss(
    inter: Tensor, intra_terms: Sequence[Tensor], intra_weight: float, batch_size: int
) -> Tensor:
    """
    Combines the inter-video loss with the batch-averaged sum of intra-video
    losses over every step of every episode: L_inter + lambda * sum L_intra / B.
    With lambda = 0 the inter-video loss is returned unchanged.
    """

    if intra_weight == 0.0 or not intra_terms:
        return inter

    return inter + ops.sum_all(ops.stack(list(intra_terms))) * (intra_weight / batch_size)
