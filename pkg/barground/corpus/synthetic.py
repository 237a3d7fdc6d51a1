"""
module barground.corpus.synthetic

Contains the planted-segment corpus generator. Every clip is Gaussian noise
with per-coordinate standard deviation 1/sqrt(d_k); the clips of one
contiguous segment additionally carry signal_to_noise times the latent signal
of the sample's query.
"""

from functools import lru_cache
import hashlib
import logging
import math
from typing import List, Sequence

import numpy as np

from ..config import CorpusConfig
from ..extractor import Boundary
from .dataclasses import GroundingSample

logger = logging.getLogger(__name__)


@lru_cache(maxsize=4096)
def _token_direction(seed: int, token: int, feature_dim: int) -> np.ndarray:
    digest: bytes = hashlib.sha256(f"{seed}:{token}".encode("utf-8")).digest()
    rng: np.random.Generator = np.random.default_rng(int.from_bytes(digest[:8], "little"))
    direction: np.ndarray = rng.standard_normal(feature_dim)
    direction /= np.linalg.norm(direction)
    direction.flags.writeable = False
    return direction


def query_signal(tokens: Sequence[int], feature_dim: int, seed: int) -> np.ndarray:
    """
    Derives the latent signal vector of a query: the L2-normalized sum of one
    hashed unit direction per token. The result depends only on the token
    multiset and the corpus seed.

    Args:
        tokens (Sequence[int]): The token ids of the query
        feature_dim (int): The clip feature dimension d_k
        seed (int): The corpus seed

    Returns:
        np.ndarray: A unit vector in R^d_k (zero if the directions cancel)

    Raises:
        Nothing
    """

    total: np.ndarray = np.zeros(feature_dim)
    for token in sorted(tokens):
        total += _token_direction(seed, int(token), feature_dim)

    norm: float = float(np.linalg.norm(total))
    return total / norm if norm > 0.0 else total


def generate_synthetic(config: CorpusConfig) -> List[GroundingSample]:
    """
    Generates a planted-segment corpus. The same config always yields the same
    corpus.

    Args:
        config (CorpusConfig): The corpus parameters

    Returns:
        List[GroundingSample]: The generated samples, each with its planted
            segment recorded as gt_segment

    Raises:
        ConfigException: If the config holds degenerate ranges
    """

    config.validate()
    rng: np.random.Generator = np.random.default_rng(config.seed)
    noise_scale: float = 1.0 / math.sqrt(config.feature_dim)
    samples: List[GroundingSample] = []

    for index in range(config.num_samples):
        clip_count: int = int(rng.integers(config.clip_count_min, config.clip_count_max + 1))
        query_length: int = int(
            rng.integers(config.query_length_min, config.query_length_max + 1)
        )
        tokens: tuple[int, ...] = tuple(
            int(token) for token in rng.integers(0, config.vocab_size, size=query_length)
        )
        fraction: float = float(
            rng.uniform(config.segment_fraction_min, config.segment_fraction_max)
        )
        segment_length: int = min(clip_count, max(1, math.ceil(fraction * clip_count)))
        segment_start: int = int(rng.integers(0, clip_count - segment_length + 1))

        features: np.ndarray = rng.normal(
            0.0, noise_scale, size=(clip_count, config.feature_dim)
        )
        features[segment_start : segment_start + segment_length] += (
            config.signal_to_noise * query_signal(tokens, config.feature_dim, config.seed)
        )

        samples.append(
            GroundingSample(
                video_id=f"synthetic-{config.seed}-{index:05d}",
                clip_features=features,
                query_tokens=tokens,
                gt_segment=Boundary(segment_start, segment_start + segment_length),
            )
        )

    logger.info("generated %d synthetic samples (seed %d)", len(samples), config.seed)
    return samples
