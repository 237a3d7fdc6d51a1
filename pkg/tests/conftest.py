from typing import List

import numpy as np
import pytest

from barground.config import CorpusConfig, RunConfig
from barground.corpus import GroundingSample, generate_synthetic
from barground.model import GroundingModel


def tiny_run_config() -> RunConfig:
    config: RunConfig = RunConfig.make_default()

    config.corpus = CorpusConfig(
        num_samples=8,
        clip_count_min=8,
        clip_count_max=12,
        feature_dim=6,
        vocab_size=20,
        query_length_min=2,
        query_length_max=4,
        seed=3,
    )
    config.model.hidden_size = 8
    config.model.embedding_dim = 4
    config.model.vocab_size = 20
    config.model.feature_dim = 6
    config.model.dropout_rate = 0.2

    config.train.batch_size = 4
    config.train.half_period = 1
    config.train.max_steps = 3
    config.train.total_iterations = 4
    config.train.seed = 5

    config.inference.max_steps = 3
    return config


@pytest.fixture
def run_config() -> RunConfig:
    return tiny_run_config()


@pytest.fixture
def corpus(run_config: RunConfig) -> List[GroundingSample]:
    return generate_synthetic(run_config.corpus)


@pytest.fixture
def model(run_config: RunConfig) -> GroundingModel:
    return GroundingModel(run_config.model, np.random.default_rng(run_config.train.seed))


@pytest.fixture
def config_path(run_config: RunConfig, tmp_path) -> str:
    path: str = str(tmp_path / "tiny-config.json")
    run_config.to_file(path)
    return path
