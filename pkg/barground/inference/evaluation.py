"""
module barground.inference.evaluation

Contains evaluate(), which grounds every labeled sample of a test corpus and
reduces the predictions to tIoU@chi recall, mean tIoU, time per query and the
correlation between alignment score and overlap
"""

from concurrent.futures import ThreadPoolExecutor
import logging
import math
import os
import time
from typing import List, Sequence, Tuple

import numpy as np

from ..autodiff.exceptions import ContractException
from ..config import AblationConfig, InferenceConfig
from ..corpus import GroundingSample
from ..model import GroundingModel
from ..planner import RolloutMode
from .dataclasses import EvaluationReport, GroundingResult
from .enums import Baseline
from .grounding import ground, ground_center
from .tiou import temporal_iou
from .trace import export_trace, trace_file_name

logger = logging.getLogger(__name__)


def _correlation(scores: List[float], overlaps: List[float]) -> float | None:
    if len(scores) < 2 or np.std(scores) == 0.0 or np.std(overlaps) == 0.0:
        return None

    return float(np.corrcoef(scores, overlaps)[0, 1])


def evaluate(
    model: GroundingModel | None,
    samples: Sequence[GroundingSample],
    config: InferenceConfig,
    ablation: AblationConfig | None = None,
    workers: int = 1,
    baseline: Baseline | None = None,
    seed: int = 0,
    trace_dir: str | None = None,
) -> EvaluationReport:
    """
    Grounds every sample that carries a ground-truth segment and measures the
    predictions. Samples are grounded on up to workers threads; results are
    reduced in sample order, so the report does not depend on workers.

    Args:
        model (GroundingModel | None): The model to evaluate; may be None for the
            center baseline
        samples (Sequence[GroundingSample]): The test corpus
        config (InferenceConfig): Steps, penalty parameters and thresholds
        ablation (AblationConfig | None): Switches applied while grounding
        workers (int): Number of grounding threads
        baseline (Baseline | None): Evaluate a reference predictor instead of the
            model's greedy policy
        seed (int): Seed of the random baseline and of random rewards
        trace_dir (str | None): Directory to export one trace per query into

    Returns:
        EvaluationReport: The metrics

    Raises:
        ContractException: If a baseline other than CENTER is requested without
            a model
        TraceException: If a trace cannot be written
    """

    ablation = ablation or AblationConfig()
    labeled: List[GroundingSample] = [sample for sample in samples if sample.gt_segment is not None]
    skipped: int = len(samples) - len(labeled)
    if skipped:
        logger.warning("skipping %d samples without a ground-truth segment", skipped)

    if model is None and baseline != Baseline.CENTER:
        raise ContractException("Only the center baseline can be evaluated without a model")

    def run(job: Tuple[int, GroundingSample]) -> Tuple[GroundingResult, float]:
        index, sample = job
        started: float = time.perf_counter()
        rng: np.random.Generator = np.random.default_rng([seed, index])

        match baseline:
            case Baseline.CENTER:
                result: GroundingResult = ground_center(sample, ablation)
            case Baseline.RANDOM:
                result = ground(model, sample, config, ablation, RolloutMode.RANDOM, rng)
            case _:
                result = ground(model, sample, config, ablation, RolloutMode.GREEDY, rng)

        return result, time.perf_counter() - started

    jobs: List[Tuple[int, GroundingSample]] = list(enumerate(labeled))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes: List[Tuple[GroundingResult, float]] = list(executor.map(run, jobs))
    else:
        outcomes = [run(job) for job in jobs]

    if trace_dir is not None:
        for index, (sample, (result, _)) in enumerate(zip(labeled, outcomes)):
            export_trace(result, os.path.join(trace_dir, trace_file_name(index, sample.video_id)))

    report: EvaluationReport = EvaluationReport(skipped=skipped, evaluated=len(labeled))
    if not labeled:
        report.recall = {f"{threshold:g}": 0.0 for threshold in config.thresholds}
        return report

    overlaps: np.ndarray = np.array(
        [
            temporal_iou(result.boundary, sample.gt_segment)
            for sample, (result, _) in zip(labeled, outcomes)
        ]
    )
    report.recall = {
        f"{threshold:g}": float(np.mean(overlaps > threshold))
        for threshold in sorted(config.thresholds, reverse=True)
    }
    report.mean_iou = float(overlaps.mean())
    report.mean_seconds = float(np.mean([seconds for _, seconds in outcomes]))
    report.max_candidates = max(len(result.candidates) for result, _ in outcomes)

    candidate_scores: List[float] = []
    candidate_overlaps: List[float] = []
    for sample, (result, _) in zip(labeled, outcomes):
        for candidate in result.candidates:
            if math.isfinite(candidate.score):
                candidate_scores.append(candidate.score)
                candidate_overlaps.append(temporal_iou(candidate.boundary, sample.gt_segment))
    report.correlation = _correlation(candidate_scores, candidate_overlaps)

    logger.info(
        "evaluated %d queries: mean tIoU %.4f (%s)",
        report.evaluated,
        report.mean_iou,
        baseline or "model",
    )
    return report
