"""
module barground.planner.rollout

Contains rollout(), one episode of boundary refinement over a sample
"""

import logging

import numpy as np

from .. import constants
from ..autodiff import Tensor, eval_mode, no_grad, ops
from ..autodiff.exceptions import ContractException
from ..config import AblationConfig
from ..corpus import TrainingSample
from ..evaluator import AlignmentEvaluator, sign_reward
from ..extractor import Boundary, SegmentPartition
from .actionplanner import ActionPlanner
from .amplitude import amplitude, apply_action, shift_clips
from .dataclasses import Action, PolicyOutput, PlannerState, Trajectory, Transition
from .enums import ActionKind, RolloutMode

logger = logging.getLogger(__name__)


def _current_score(
    evaluator: AlignmentEvaluator, clips: Tensor, boundary: Boundary, query: Tensor
) -> float:
    # rewards never backpropagate and never see dropout
    with no_grad(), eval_mode():
        return evaluator.score(SegmentPartition.of(clips, boundary).current, query).item()


def _pick_action(
    mode: RolloutMode, policy: PolicyOutput | None, rng: np.random.Generator
) -> int:
    match mode:
        case RolloutMode.RANDOM:
            return int(rng.integers(constants.ACTION_COUNT))
        case RolloutMode.GREEDY:
            # argmax keeps the first of tied actions
            return int(np.argmax(policy.log_probs.numpy()))
        case RolloutMode.SAMPLE:
            probs: np.ndarray = policy.probs.numpy()
            return int(rng.choice(constants.ACTION_COUNT, p=probs / probs.sum()))


def rollout(
    evaluator: AlignmentEvaluator,
    planner: ActionPlanner,
    sample: TrainingSample,
    query: Tensor,
    mode: RolloutMode,
    max_steps: int,
    rng: np.random.Generator,
    ablation: AblationConfig | None = None,
    stop_threshold: float | None = None,
) -> Trajectory:
    """
    Refines the initial boundary of a sample for max_steps steps. Each step scores
    the current boundary, sizes the action by the amplitude factor nu, runs the
    planner, picks an action, applies it and rewards the change in the
    current-segment score.

    Args:
        evaluator (AlignmentEvaluator): Scores boundaries; never trained here
        planner (ActionPlanner): Produces the policy and value estimates
        sample (TrainingSample): The clips and query to ground
        query (Tensor): The encoded query E
        mode (RolloutMode): How actions are picked
        max_steps (int): T_max, the number of steps of a full episode
        rng (np.random.Generator): Source of sampled actions and random rewards
        ablation (AblationConfig | None): Initial boundary, fixed amplitude,
            random reward and tie reward switches
        stop_threshold (float | None): Ends the episode at the first boundary
            whose current-segment score reaches this value

    Returns:
        Trajectory: Exactly max_steps transitions unless a stop threshold ended
            the episode early

    Raises:
        ContractException: If max_steps is below 1
    """

    ablation = ablation or AblationConfig()
    if max_steps < 1:
        raise ContractException(f"A rollout needs at least one step, got {max_steps}")

    clips: Tensor = Tensor(sample.clip_features)
    clip_count: int = sample.clip_count
    boundary: Boundary = Boundary.initial(clip_count, ablation.init_boundary)

    with no_grad(), eval_mode():
        global_score: float = evaluator.score(clips, query).item()
    score: float = _current_score(evaluator, clips, boundary, query)

    trajectory: Trajectory = Trajectory(
        initial_boundary=boundary, initial_score=score, global_score=global_score
    )
    global_feature: Tensor = ops.mean_pool(clips)
    hidden: Tensor = planner.initial_hidden()

    for step in range(1, max_steps + 1):
        if stop_threshold is not None and score >= stop_threshold:
            trajectory.stopped = True
            break

        amplitude_factor: int = (
            ablation.fixed_amplitude
            if ablation.fixed_amplitude is not None
            else amplitude(score, global_score)
        )

        policy: PolicyOutput | None = None
        if mode != RolloutMode.RANDOM:
            parts: SegmentPartition = SegmentPartition.of(clips, boundary)
            segment_feature: Tensor = ops.mean_pool(parts.current)
            gated_segment, gated_query = planner.cross_gate(segment_feature, query)
            state: PlannerState = planner.build_state(
                gated_query,
                gated_segment,
                global_feature,
                ops.mean_pool(parts.left),
                ops.mean_pool(parts.right),
                Tensor(boundary.normalized_location(clip_count)),
                hidden,
                step,
            )
            hidden = state.hidden
            policy = planner.policy_value(state)

        action_index: int = _pick_action(mode, policy, rng)
        action: Action = Action(
            ActionKind(action_index), shift_clips(clip_count, amplitude_factor)
        )
        next_boundary: Boundary = apply_action(boundary, action, clip_count)
        next_score: float = _current_score(evaluator, clips, next_boundary, query)

        reward: float
        if ablation.random_reward:
            reward = float(rng.uniform(-1.0, 1.0))
        else:
            reward = float(sign_reward(next_score, score, ablation.tie_reward))

        trajectory.transitions.append(
            Transition(
                step=step,
                boundary_before=boundary,
                action=action,
                amplitude=amplitude_factor,
                boundary_after=next_boundary,
                score_before=score,
                score_after=next_score,
                reward=reward,
                log_prob=None if policy is None else policy.log_prob(action_index),
                entropy=None if policy is None else policy.entropy(),
                value=None if policy is None else policy.value,
            )
        )
        boundary, score = next_boundary, next_score

    logger.debug(
        "%s rollout of '%s': %s -> %s in %d steps",
        mode,
        sample.video_id,
        trajectory.initial_boundary,
        boundary,
        len(trajectory),
    )
    return trajectory
