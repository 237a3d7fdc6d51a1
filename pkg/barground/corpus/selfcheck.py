"""
module barground.corpus.selfcheck

Contains planted_recall(), the sanity check that the planted segments of a
synthetic corpus are separable from the surrounding noise
"""

import logging
from typing import List

import numpy as np

from .dataclasses import GroundingSample, SelfCheckReport
from .synthetic import query_signal

logger = logging.getLogger(__name__)


def _cosines(features: np.ndarray, signal: np.ndarray) -> np.ndarray:
    norms: np.ndarray = np.linalg.norm(features, axis=1)
    return (features @ signal) / np.maximum(norms, 1e-12)


def planted_recall(samples: List[GroundingSample], seed: int) -> SelfCheckReport:
    """
    Counts clips whose cosine with the query signal falls on the correct side of
    the other group's mean: an inside clip must beat the mean outside cosine, an
    outside clip must stay below the mean inside cosine. Samples without a
    ground-truth segment or without outside clips are skipped.

    Args:
        samples (List[GroundingSample]): A synthetic corpus
        seed (int): The seed the corpus was generated with

    Returns:
        SelfCheckReport: Separated and total clip counts

    Raises:
        Nothing
    """

    report: SelfCheckReport = SelfCheckReport(0, 0, 0)

    for sample in samples:
        segment = sample.gt_segment
        if segment is None or segment.length == sample.clip_count:
            report.skipped_samples += 1
            continue

        cosines: np.ndarray = _cosines(
            sample.clip_features,
            query_signal(sample.query_tokens, sample.feature_dim, seed),
        )
        inside: np.ndarray = np.zeros(sample.clip_count, dtype=bool)
        inside[segment.start : segment.end] = True

        report.separated_clips += int(np.sum(cosines[inside] > cosines[~inside].mean()))
        report.separated_clips += int(np.sum(cosines[~inside] < cosines[inside].mean()))
        report.total_clips += sample.clip_count

    logger.info(
        "planted recall %.4f over %d clips (%d samples skipped)",
        report.fraction,
        report.total_clips,
        report.skipped_samples,
    )
    return report
