"""
module barground.autodiff.checkpoint

Contains the definition of the Checkpoint class, the versioned .npz container
that maps parameter names to their values alongside optimizer state and
string metadata
"""

from dataclasses import dataclass, field
import logging
from typing import Dict
import zipfile

import numpy as np

from ..constants import CHECKPOINT_FORMAT_VERSION
from .exceptions import CheckpointException

logger = logging.getLogger(__name__)

_FORMAT_KEY: str = "format_version"
_PARAMETER_PREFIX: str = "param."
_OPTIMIZER_PREFIX: str = "optim."
_METADATA_PREFIX: str = "meta."


@dataclass
class Checkpoint:
    """
    class Checkpoint

    Parameter values by dotted name, optimizer states by parameter group name
    and free-form string metadata (config echo, iteration, generator state)
    """

    parameters: Dict[str, np.ndarray]
    optimizer_states: Dict[str, Dict[str, np.ndarray]] = field(default_factory=dict)
    metadata: Dict[str, str] = field(default_factory=dict)

    @classmethod
    def load(cls: type["Checkpoint"], path: str) -> "Checkpoint":
        """
        Reads a checkpoint written by save()

        Args:
            path (str): The checkpoint file to read

        Returns:
            Checkpoint: The restored checkpoint

        Raises:
            CheckpointException: If the file cannot be read or has an
                unsupported format version
        """

        try:
            with np.load(path, allow_pickle=False) as archive:
                arrays: Dict[str, np.ndarray] = {key: archive[key] for key in archive.files}
        except (OSError, ValueError, zipfile.BadZipFile) as exc:
            raise CheckpointException(f"Unable to read checkpoint '{path}': {exc}") from exc

        if _FORMAT_KEY not in arrays:
            raise CheckpointException(f"'{path}' is not a barground checkpoint")
        if int(arrays[_FORMAT_KEY]) != CHECKPOINT_FORMAT_VERSION:
            raise CheckpointException(
                f"Checkpoint '{path}' has format version {int(arrays[_FORMAT_KEY])}, "
                f"expected {CHECKPOINT_FORMAT_VERSION}"
            )

        checkpoint: Checkpoint = cls(parameters={})
        for key, array in arrays.items():
            if key.startswith(_PARAMETER_PREFIX):
                checkpoint.parameters[key[len(_PARAMETER_PREFIX) :]] = array
            elif key.startswith(_OPTIMIZER_PREFIX):
                group, name = key[len(_OPTIMIZER_PREFIX) :].split(".", 1)
                checkpoint.optimizer_states.setdefault(group, {})[name] = array
            elif key.startswith(_METADATA_PREFIX):
                checkpoint.metadata[key[len(_METADATA_PREFIX) :]] = str(array)

        return checkpoint

    def save(self: "Checkpoint", path: str) -> None:
        """
        Writes this checkpoint to path as an uncompressed .npz archive

        Args:
            path (str): The file to write. No suffix is appended.

        Returns:
            Nothing

        Raises:
            CheckpointException: If the file cannot be written
        """

        arrays: Dict[str, np.ndarray] = {
            _FORMAT_KEY: np.asarray(CHECKPOINT_FORMAT_VERSION, dtype=np.int64)
        }
        for name, value in self.parameters.items():
            arrays[_PARAMETER_PREFIX + name] = np.asarray(value, dtype=np.float64)
        for group, state in self.optimizer_states.items():
            for name, value in state.items():
                arrays[f"{_OPTIMIZER_PREFIX}{group}.{name}"] = np.asarray(value)
        for key, value in self.metadata.items():
            arrays[_METADATA_PREFIX + key] = np.asarray(value, dtype=np.str_)

        try:
            with open(path, "wb") as checkpoint_file:
                np.savez(checkpoint_file, **arrays)
        except OSError as exc:
            raise CheckpointException(f"Unable to write checkpoint '{path}': {exc}") from exc

        logger.info("wrote checkpoint with %d parameters to %s", len(self.parameters), path)
