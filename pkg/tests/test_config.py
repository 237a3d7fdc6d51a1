import json

import pytest

from barground.config import AblationConfig, InferenceConfig, RunConfig, TrainConfig
from barground.config.exceptions import ConfigException
from barground import constants


def test_defaults_are_valid() -> None:
    config: RunConfig = RunConfig.make_default()

    config.validate()
    assert config.train.batch_size == 12
    assert config.train.discount == 0.4
    assert config.inference.penalty_baseline == 0.35
    assert config.ablation.tie_reward == -1


def test_config_file_round_trip(tmp_path, run_config) -> None:
    path: str = str(tmp_path / "config.json")

    run_config.to_file(path)

    assert RunConfig.from_file(path) == run_config


def test_unknown_keys_are_rejected() -> None:
    with pytest.raises(ConfigException):
        RunConfig.from_config_dict({"train": {"batchsize": 4}})


def test_other_versions_are_rejected() -> None:
    with pytest.raises(ConfigException, match="version"):
        RunConfig.from_config_dict({"version": "9.9"})


def test_unreadable_files_are_config_errors(tmp_path) -> None:
    path = tmp_path / "config.json"
    path.write_text("[1, 2]", encoding="utf-8")

    with pytest.raises(ConfigException):
        RunConfig.from_file(str(path))
    with pytest.raises(ConfigException):
        RunConfig.from_file(str(tmp_path / "missing.json"))


def test_partial_files_keep_the_defaults(tmp_path) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"train": {"batch_size": 4}}), encoding="utf-8")

    config: RunConfig = RunConfig.from_file(str(path))

    assert config.train.batch_size == 4
    assert config.train.lr == 0.001


def test_no_intra_zeroes_the_intra_weight() -> None:
    config: RunConfig = RunConfig(ablation=AblationConfig(no_intra=True))

    config.resolve()

    assert config.train.intra_weight == 0.0


@pytest.mark.parametrize(
    "section",
    [
        TrainConfig(batch_size=1),
        TrainConfig(discount=1.5),
        TrainConfig(train_fraction=1.0),
        InferenceConfig(penalty_baseline=0.0),
        InferenceConfig(penalty_modulation=0.0),
        InferenceConfig(thresholds=[]),
        AblationConfig(fixed_amplitude=7),
        AblationConfig(tie_reward=1),
    ],
)
def test_out_of_range_values_are_rejected(section) -> None:
    with pytest.raises(ConfigException):
        section.validate()


def test_long_profile_baseline_is_valid() -> None:
    InferenceConfig(penalty_baseline=constants.PROFILE_PENALTY_BASELINES["long"]).validate()


def test_default_run_dir_honors_the_environment(monkeypatch, tmp_path) -> None:
    monkeypatch.setenv(constants.ENV_RUN_DIR, str(tmp_path))

    assert RunConfig.default_run_dir() == str(tmp_path)
