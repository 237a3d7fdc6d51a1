"""
module barground.inference.grounding

Contains ground(), which predicts one segment per query by refining the initial
boundary and keeping the best penalized candidate, and the center baseline
"""

import math
from typing import List

import numpy as np

from ..autodiff import Tensor, eval_mode, no_grad
from ..config import AblationConfig, InferenceConfig
from ..corpus import GroundingSample, TrainingSample
from ..extractor import Boundary
from ..model import GroundingModel
from ..planner import RolloutMode, Trajectory, rollout
from .dataclasses import Candidate, GroundingResult
from .penalty import penalize


def _training_view(sample: GroundingSample | TrainingSample) -> TrainingSample:
    if isinstance(sample, GroundingSample):
        return sample.training_view()

    return sample


def best_candidate_index(candidates: List[Candidate]) -> int:
    # argmax keeps the earliest of tied candidates
    return int(np.argmax([item.penalized_score for item in candidates]))


def ground(
    model: GroundingModel,
    sample: GroundingSample | TrainingSample,
    config: InferenceConfig,
    ablation: AblationConfig | None = None,
    mode: RolloutMode = RolloutMode.GREEDY,
    rng: np.random.Generator | None = None,
) -> GroundingResult:
    """
    Runs a dropout-free rollout and returns the visited boundary with the highest
    penalized score, the initial boundary included. Ties go to the earliest step.
    When the stop threshold ends the episode early, the boundary reached at the
    stop is predicted instead.

    Args:
        model (GroundingModel): The trained model
        sample (GroundingSample | TrainingSample): The query to ground
        config (InferenceConfig): Steps and penalty parameters
        ablation (AblationConfig | None): no_penalty, stop_threshold and the
            rollout switches
        mode (RolloutMode): GREEDY for the model, RANDOM for the random baseline
        rng (np.random.Generator | None): Source of random actions and rewards

    Returns:
        GroundingResult: The prediction and every candidate examined

    Raises:
        ContractException: If the sample's query is empty
        InvalidTokenException: If the query holds an out-of-vocabulary token
    """

    ablation = ablation or AblationConfig()
    rng = rng if rng is not None else np.random.default_rng(0)
    view: TrainingSample = _training_view(sample)
    modulation: float = math.inf if ablation.no_penalty else config.penalty_modulation

    with no_grad(), eval_mode():
        query: Tensor = model.encode(view.query_tokens)
        trajectory: Trajectory = rollout(
            model.evaluator,
            model.planner,
            view,
            query,
            mode,
            config.max_steps,
            rng,
            ablation,
            stop_threshold=ablation.stop_threshold,
        )

    def candidate(step: int, boundary: Boundary, score: float, **action) -> Candidate:
        return Candidate(
            step=step,
            boundary=boundary,
            score=score,
            penalized_score=penalize(
                score, boundary, view.clip_count, config.penalty_baseline, modulation
            ),
            **action,
        )

    candidates: List[Candidate] = [
        candidate(0, trajectory.initial_boundary, trajectory.initial_score)
    ]
    for transition in trajectory.transitions:
        candidates.append(
            candidate(
                transition.step,
                transition.boundary_after,
                transition.score_after,
                action=transition.action.kind,
                amplitude=transition.amplitude,
            )
        )

    if trajectory.stopped:
        best_index: int = len(candidates) - 1
    else:
        best_index = best_candidate_index(candidates)

    return GroundingResult(
        video_id=view.video_id,
        clip_count=view.clip_count,
        candidates=candidates,
        best_index=best_index,
        stopped=trajectory.stopped,
    )


def ground_center(
    sample: GroundingSample | TrainingSample, ablation: AblationConfig | None = None
) -> GroundingResult:
    """
    Predicts the initial boundary without looking at the clips
    """

    ablation = ablation or AblationConfig()
    view: TrainingSample = _training_view(sample)
    boundary: Boundary = Boundary.initial(view.clip_count, ablation.init_boundary)

    return GroundingResult(
        video_id=view.video_id,
        clip_count=view.clip_count,
        candidates=[Candidate(step=0, boundary=boundary, score=math.nan, penalized_score=math.nan)],
        best_index=0,
    )
