"""
module barground.corpus.corpusio

Contains load_corpus() and save_corpus(), which pick a corpus file format by
file suffix, and validate_corpus(), which checks the corpus invariants
"""

import logging
import os
from typing import List, Type

import numpy as np

from .abstract import CorpusFormat
from .backends import corpus_formats_by_suffix
from .dataclasses import GroundingSample
from .exceptions import CorpusException, CorpusValidationException

logger = logging.getLogger(__name__)

MIN_CLIP_COUNT: int = 4


def _format_for(path: str) -> CorpusFormat:
    suffix: str = os.path.splitext(path)[1].lower()
    format_type: Type[CorpusFormat] | None = corpus_formats_by_suffix.get(suffix)
    if format_type is None:
        raise CorpusException(
            f"Unknown corpus file suffix {suffix!r} for '{path}' (expected one of "
            f"{', '.join(sorted(corpus_formats_by_suffix))})"
        )

    return format_type()


def validate_corpus(samples: List[GroundingSample]) -> None:
    """
    Checks the invariants every corpus must satisfy

    Args:
        samples (List[GroundingSample]): The corpus to check

    Returns:
        Nothing

    Raises:
        CorpusValidationException: Naming the first sample that has fewer than
            four clips, a ground-truth segment outside [0, N), a negative token
            id, an empty query, non-finite features or a feature dimension that
            differs from the rest of the corpus
    """

    feature_dim: int | None = None
    for sample in samples:
        name: str = f"sample '{sample.video_id}'"

        if sample.clip_features.ndim != 2:
            raise CorpusValidationException(f"{name} does not hold an (N, d_k) feature matrix")
        if sample.clip_count < MIN_CLIP_COUNT:
            raise CorpusValidationException(
                f"{name} has {sample.clip_count} clips, at least {MIN_CLIP_COUNT} are required"
            )
        if feature_dim is None:
            feature_dim = sample.feature_dim
        elif sample.feature_dim != feature_dim:
            raise CorpusValidationException(
                f"{name} has feature dimension {sample.feature_dim}, the corpus uses {feature_dim}"
            )
        if len(sample.query_tokens) == 0 or any(token < 0 for token in sample.query_tokens):
            raise CorpusValidationException(f"{name} has an empty query or a negative token id")
        if sample.gt_segment is not None and not sample.gt_segment.is_valid(sample.clip_count):
            raise CorpusValidationException(
                f"{name} has ground-truth segment {sample.gt_segment} outside its "
                f"{sample.clip_count} clips"
            )
        if not np.all(np.isfinite(sample.clip_features)):
            raise CorpusValidationException(f"{name} has non-finite clip features")


def load_corpus(path: str) -> List[GroundingSample]:
    """
    Reads and validates a corpus file. The format is chosen by suffix: .bin for
    the binary layout, .jsonl for JSON lines.

    Args:
        path (str): The corpus file

    Returns:
        List[GroundingSample]: The samples in file order

    Raises:
        CorpusException: If the suffix is unknown or the file cannot be read
        CorpusParseException: If the file is malformed
        CorpusValidationException: If a sample violates a corpus invariant
    """

    samples: List[GroundingSample] = _format_for(path).read(path)
    validate_corpus(samples)
    logger.info("loaded %d samples from %s", len(samples), path)
    return samples


def save_corpus(samples: List[GroundingSample], path: str) -> None:
    validate_corpus(samples)
    _format_for(path).write(samples, path)
    logger.info("wrote %d samples to %s", len(samples), path)
