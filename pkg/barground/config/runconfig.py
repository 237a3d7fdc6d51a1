"""
module barground.config.runconfig

Contains the definition of the RunConfig class, a dataclass that represents the
fully resolved configuration of a barground run
"""

from dataclasses import dataclass, field
import json
import os
from typing import Any, Dict, Type

from dataclasses_json import dataclass_json, Undefined
import platformdirs

from .. import constants
from .ablationconfig import AblationConfig
from .corpusconfig import CorpusConfig
from .exceptions import ConfigException
from .inferenceconfig import InferenceConfig
from .modelconfig import ModelConfig
from .tablebackendtype import TableBackendType
from .trainconfig import TrainConfig


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class RunConfig:
    """
    class RunConfig

    Dataclass that represents the fully resolved configuration of a barground
    run. The copy echoed into a run directory reproduces that run.
    """

    version: str = constants.CONFIG_VERSION
    corpus: CorpusConfig = field(default_factory=CorpusConfig)
    model: ModelConfig = field(default_factory=ModelConfig)
    train: TrainConfig = field(default_factory=TrainConfig)
    inference: InferenceConfig = field(default_factory=InferenceConfig)
    ablation: AblationConfig = field(default_factory=AblationConfig)
    table_backend: TableBackendType = TableBackendType.TERMINAL_TABLES
    workers: int = 1

    @staticmethod
    def default_run_dir() -> str:
        """
        Returns the directory that runs are written to when no --run-dir flag is
        given: $BARGROUND_RUN_DIR if it is set, otherwise a per-user data directory

        Args:
            None

        Returns:
            str: The default run directory

        Raises:
            Nothing
        """

        from_environment: str | None = os.environ.get(constants.ENV_RUN_DIR)
        if from_environment:
            return from_environment

        return os.path.join(
            platformdirs.user_data_dir(appname=constants.APPLICATION_NAME), "runs"
        )

    @classmethod
    def from_config_dict(
        cls: Type["RunConfig"], json_data: Dict[str, Any]
    ) -> "RunConfig":
        """
        Constructs and validates a RunConfig instance from the provided json dict

        Args:
            json_data (Dict[str, Any]): The json data from which to construct the
                RunConfig

        Returns:
            RunConfig: A validated RunConfig holding the provided data

        Raises:
            ConfigException: If the dict has unknown keys, the wrong version or
                invalid values
        """

        version: Any = json_data.get("version", constants.CONFIG_VERSION)
        if version != constants.CONFIG_VERSION:
            raise ConfigException(
                f"Unsupported config version {version!r} (expected {constants.CONFIG_VERSION!r})"
            )

        # pylint: disable=broad-exception-caught
        try:
            # pylint: disable=no-member
            config: RunConfig = cls.from_dict(json_data)
        except ConfigException:
            raise
        except Exception as exc:
            raise ConfigException(f"Invalid configuration: {exc}") from exc

        config.validate()
        return config

    @classmethod
    def from_file(cls: Type["RunConfig"], path: str) -> "RunConfig":
        """
        Constructs a RunConfig instance from the provided JSON file

        Args:
            path (str): The file to read JSON config data from

        Returns:
            RunConfig: A validated RunConfig holding the data from the file

        Raises:
            ConfigException: If the file cannot be read or does not describe a
                valid RunConfig
        """

        try:
            with open(path, "r", encoding="utf-8") as config_file:
                json_data: Any = json.loads(config_file.read())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigException(f"Unable to read config from '{path}': {exc}") from exc

        if not isinstance(json_data, dict):
            raise ConfigException(f"Config file '{path}' does not hold a JSON object")

        return cls.from_config_dict(json_data)

    @staticmethod
    def make_default() -> "RunConfig":
        return RunConfig()

    def resolve(self: "RunConfig") -> None:
        """
        Applies the ablation switches that are expressed through other sections
        """

        if self.ablation.no_intra:
            self.train.intra_weight = 0.0

    def to_file(self: "RunConfig", output_path: str) -> None:
        """
        Writes this RunConfig instance to the file with the specified path as
        JSON data.

        Args:
            output_path (str): The path of the file to write the config to

        Returns:
            Nothing

        Raises:
            ConfigException: If the file was unable to be written to
        """

        try:
            with open(output_path, "w", encoding="utf-8") as output_file:
                # pylint: disable=no-member
                print(self.to_json(indent=2), file=output_file)
        except OSError as exc:
            raise ConfigException(f"Unable to write config to '{output_path}': {exc}") from exc

    def validate(self: "RunConfig") -> None:
        self.corpus.validate()
        self.model.validate()
        self.train.validate()
        self.inference.validate()
        self.ablation.validate()

        if self.workers < 1:
            raise ConfigException(f"workers must be at least 1, got {self.workers}")
