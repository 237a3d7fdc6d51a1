"""
module barground.corpus.split

Contains split(), the seeded train/test partition of a corpus
"""

from typing import List, Sequence, Tuple, TypeVar

import numpy as np

from ..config.exceptions import ConfigException

SampleType = TypeVar("SampleType")


def split(
    samples: Sequence[SampleType], train_fraction: float, seed: int
) -> Tuple[List[SampleType], List[SampleType]]:
    """
    Shuffles the corpus with a seeded generator and cuts it into a train and a
    test part. The parts are disjoint and together hold every sample.

    Args:
        samples (Sequence[SampleType]): The corpus
        train_fraction (float): Share of samples placed in the train part
        seed (int): Seed of the shuffle

    Returns:
        Tuple[List[SampleType], List[SampleType]]: The train and test parts

    Raises:
        ConfigException: If train_fraction is not inside (0, 1)
    """

    if not 0.0 < train_fraction < 1.0:
        raise ConfigException(f"train_fraction must lie in (0, 1), got {train_fraction}")

    order: np.ndarray = np.random.default_rng(seed).permutation(len(samples))
    train_count: int = int(round(train_fraction * len(samples)))
    if len(samples) >= 2:
        train_count = min(max(train_count, 1), len(samples) - 1)

    return (
        [samples[int(index)] for index in order[:train_count]],
        [samples[int(index)] for index in order[train_count:]],
    )
