"""
module barground.model.loading

Contains load_model(), which rebuilds a GroundingModel and the RunConfig it
was trained with from a training checkpoint
"""

import json
import logging
from typing import Tuple

import numpy as np

from ..autodiff import Checkpoint
from ..autodiff.exceptions import CheckpointException
from ..config import RunConfig
from .groundingmodel import GroundingModel

logger = logging.getLogger(__name__)


def config_of(checkpoint: Checkpoint) -> RunConfig:
    if "config" not in checkpoint.metadata:
        raise CheckpointException("Checkpoint carries no config echo")

    try:
        config_data = json.loads(checkpoint.metadata["config"])
    except json.JSONDecodeError as exc:
        raise CheckpointException(f"Checkpoint config echo is not JSON: {exc}") from exc

    return RunConfig.from_config_dict(config_data)


def load_model(path: str) -> Tuple[GroundingModel, RunConfig]:
    """
    Reads a training checkpoint and restores the model it holds

    Args:
        path (str): The checkpoint file

    Returns:
        Tuple[GroundingModel, RunConfig]: The restored model and its config

    Raises:
        CheckpointException: If the checkpoint is unreadable, lacks a config
            echo or does not match the architecture the config describes
        ConfigException: If the config echo is invalid
    """

    checkpoint: Checkpoint = Checkpoint.load(path)
    config: RunConfig = config_of(checkpoint)

    model: GroundingModel = GroundingModel(
        config.model,
        np.random.default_rng(config.train.seed),
        no_context=config.ablation.no_context,
    )
    model.load_state_dict(checkpoint.parameters)
    logger.info("loaded %d parameters from %s", len(checkpoint.parameters), path)
    return model, config
