import json
import os
from typing import List

import numpy as np
import pytest

from barground import constants
from barground.autodiff import Checkpoint
from barground.barground import BarGround
from barground.corpus import load_corpus
from barground.entrypoint import main
from barground.inference import read_trace

_TINY_CORPUS_FLAGS: List[str] = [
    "--samples", "8",
    "--clips-min", "8",
    "--clips-max", "12",
    "--feature-dim", "6",
    "--vocab-size", "20",
    "--query-min", "2",
    "--query-max", "4",
    "--seed", "3",
]


def _run(*argv: str) -> int:
    return BarGround().run(list(argv))


@pytest.fixture
def corpus_file(tmp_path) -> str:
    path: str = str(tmp_path / "corpus.bin")
    assert _run("gen", "--out", path, *_TINY_CORPUS_FLAGS) == constants.EXIT_SUCCESS
    return path


@pytest.fixture
def checkpoint_file(tmp_path, corpus_file, config_path) -> str:
    run_dir: str = str(tmp_path / "run")
    assert (
        _run("train", corpus_file, "--config", config_path, "--run-dir", run_dir, "--no-progress")
        == constants.EXIT_SUCCESS
    )
    return os.path.join(run_dir, constants.CHECKPOINT_FILE_NAME)


def test_gen_is_deterministic(tmp_path, capsys) -> None:
    first: str = str(tmp_path / "first.jsonl")
    second: str = str(tmp_path / "second.jsonl")

    assert _run("gen", "--out", first, *_TINY_CORPUS_FLAGS) == constants.EXIT_SUCCESS
    assert _run("gen", "--out", second, *_TINY_CORPUS_FLAGS) == constants.EXIT_SUCCESS

    assert load_corpus(first) == load_corpus(second)
    assert "Wrote 8 samples" in capsys.readouterr().out


def test_gen_rejects_an_inverted_segment_range(tmp_path, capsys) -> None:
    path: str = str(tmp_path / "corpus.bin")

    code: int = _run("gen", "--out", path, "--segment-min", "0.5", "--segment-max", "0.2")

    assert code == constants.EXIT_USAGE
    assert "Segment fraction" in capsys.readouterr().err
    assert not os.path.exists(path)


def test_train_writes_a_run_directory(tmp_path, checkpoint_file) -> None:
    run_dir: str = os.path.dirname(checkpoint_file)

    assert os.path.exists(checkpoint_file)
    assert os.path.exists(os.path.join(run_dir, constants.CONFIG_FILE_NAME))
    with open(os.path.join(run_dir, constants.METRICS_FILE_NAME), "r", encoding="utf-8") as log:
        assert len(log.read().splitlines()) == 4


def test_no_intra_is_echoed_as_a_zero_weight(tmp_path, corpus_file, config_path) -> None:
    run_dir: str = str(tmp_path / "no-intra")

    code: int = _run(
        "train", corpus_file, "--config", config_path, "--run-dir", run_dir,
        "--no-progress", "--no-intra", "--iterations", "1",
    )

    assert code == constants.EXIT_SUCCESS
    with open(os.path.join(run_dir, constants.CONFIG_FILE_NAME), "r", encoding="utf-8") as echo:
        config = json.load(echo)
    assert config["train"]["intra_weight"] == 0.0
    assert config["ablation"]["no_intra"] is True


def test_train_rejects_a_batch_larger_than_the_corpus(tmp_path, corpus_file, config_path) -> None:
    code: int = _run(
        "train", corpus_file, "--config", config_path, "--run-dir", str(tmp_path / "run"),
        "--no-progress", "--batch-size", "20",
    )

    assert code == constants.EXIT_USAGE


def test_train_rejects_tokens_outside_the_vocabulary(tmp_path, corpus_file, run_config, capsys) -> None:
    run_config.model.vocab_size = 2
    path: str = str(tmp_path / "small-vocabulary.json")
    run_config.to_file(path)

    code: int = _run("train", corpus_file, "--config", path, "--run-dir", str(tmp_path / "run"), "--no-progress")

    assert code == constants.EXIT_USAGE
    assert "vocab_size" in capsys.readouterr().err


def test_resume_continues_to_the_new_total(corpus_file, checkpoint_file) -> None:
    code: int = _run("train", corpus_file, "--resume", checkpoint_file, "--iterations", "6", "--no-progress")

    assert code == constants.EXIT_SUCCESS
    with open(
        os.path.join(os.path.dirname(checkpoint_file), constants.METRICS_FILE_NAME), "r", encoding="utf-8"
    ) as log:
        iterations: List[int] = [json.loads(line)["iteration"] for line in log.read().splitlines()]
    assert iterations == list(range(6))


def test_eval_reports_recall_per_threshold(checkpoint_file, corpus_file, capsys) -> None:
    code: int = _run(
        "eval", checkpoint_file, corpus_file, "--thresholds", "0.3,0.5,0.7", "--table-backend", "csv"
    )

    out: str = capsys.readouterr().out
    assert code == constants.EXIT_SUCCESS
    assert "Evaluated 8 queries" in out
    for threshold in ("0.3", "0.5", "0.7"):
        assert f"tIoU@{threshold}," in out


def test_eval_exports_traces(tmp_path, checkpoint_file, corpus_file) -> None:
    trace_dir: str = str(tmp_path / "traces")

    assert _run("eval", checkpoint_file, corpus_file, "--trace-dir", trace_dir) == constants.EXIT_SUCCESS

    names: List[str] = sorted(os.listdir(trace_dir))
    assert len(names) == 8
    for name in names:
        _, rows = read_trace(os.path.join(trace_dir, name))
        assert sum(row.best for row in rows) == 1


def test_eval_center_baseline(checkpoint_file, corpus_file, capsys) -> None:
    assert _run("eval", checkpoint_file, corpus_file, "--baseline", "center") == constants.EXIT_SUCCESS
    assert "center baseline" in capsys.readouterr().out


def test_trace_writes_one_row_per_step(tmp_path, checkpoint_file, corpus_file) -> None:
    path: str = str(tmp_path / "trace.jsonl")

    code: int = _run("trace", checkpoint_file, corpus_file, "--index", "2", "--out", path, "--steps", "5")

    assert code == constants.EXIT_SUCCESS
    header, rows = read_trace(path)
    assert header.video_id == load_corpus(corpus_file)[2].video_id
    assert len(rows) == 6
    assert sum(row.best for row in rows) == 1


def test_trace_rejects_an_index_outside_the_corpus(tmp_path, checkpoint_file, corpus_file) -> None:
    code: int = _run(
        "trace", checkpoint_file, corpus_file, "--index", "8", "--out", str(tmp_path / "trace.jsonl")
    )

    assert code == constants.EXIT_USAGE


def test_sweep_evaluates_every_value(checkpoint_file, corpus_file, capsys) -> None:
    code: int = _run(
        "sweep", checkpoint_file, corpus_file, "--parameter", "baseline", "--values", "0.2,0.35,1",
        "--table-backend", "csv",
    )

    out: str = capsys.readouterr().out
    assert code == constants.EXIT_SUCCESS
    for value in ("0.2", "0.35", "1"):
        assert f"\n{value}," in out


def test_sweep_rejects_an_invalid_value(checkpoint_file, corpus_file) -> None:
    code: int = _run(
        "sweep", checkpoint_file, corpus_file, "--parameter", "modulation", "--values", "0.5,-1"
    )

    assert code == constants.EXIT_USAGE


def test_gradcheck_passes(capsys) -> None:
    assert _run("gradcheck") == constants.EXIT_SUCCESS
    assert "gradient checks passed" in capsys.readouterr().out


def test_gradcheck_names_a_broken_operation(capsys) -> None:
    code: int = _run("gradcheck", "--case", "tanh", "--case", "gru_step", "--break-op", "tanh")

    out: str = capsys.readouterr().out
    assert code == constants.EXIT_FAILURE
    assert "FAILED" in out
    assert "'tanh'" in out


def test_unknown_commands_get_a_suggestion(capsys) -> None:
    assert _run("trian") == constants.EXIT_USAGE
    assert "did you mean 'train'?" in capsys.readouterr().err


def test_bad_arguments_are_usage_errors(capsys) -> None:
    assert _run("eval") == constants.EXIT_USAGE
    assert "barground eval" in capsys.readouterr().err


def test_help_lists_every_command(capsys) -> None:
    assert _run("help") == constants.EXIT_SUCCESS

    out: str = capsys.readouterr().out
    for command in ("eval", "gen", "gradcheck", "sweep", "trace", "train"):
        assert command in out


def test_help_flag_exits_cleanly() -> None:
    assert _run("gen", "--help") == constants.EXIT_SUCCESS


def test_no_command_shows_usage(capsys) -> None:
    assert _run() == constants.EXIT_USAGE
    assert "usage: barground" in capsys.readouterr().out


def test_entrypoint_takes_a_log_level(tmp_path) -> None:
    path: str = str(tmp_path / "corpus.jsonl")

    assert main(["--log-level", "debug", "gen", "--out", path, *_TINY_CORPUS_FLAGS]) == 0
    assert os.path.exists(path)


_FIXTURES: str = os.path.join(os.path.dirname(__file__), "fixtures")
_ZERO_POLICY: str = os.path.join(_FIXTURES, "zero-policy.npz")
_FIXTURE_CORPUS: str = os.path.join(_FIXTURES, "fixture-corpus.jsonl")


def test_zero_policy_fixture_holds_only_zeros() -> None:
    checkpoint: Checkpoint = Checkpoint.load(_ZERO_POLICY)

    assert checkpoint.parameters
    assert all(not np.any(values) for values in checkpoint.parameters.values())


def test_eval_of_the_pinned_fixture_matches_the_expected_table(capsys) -> None:
    code: int = _run("eval", _ZERO_POLICY, _FIXTURE_CORPUS, "--table-backend", "csv")

    lines: List[str] = capsys.readouterr().out.splitlines()
    with open(os.path.join(_FIXTURES, "zero-policy-eval.csv"), "r", encoding="utf-8") as expected_file:
        expected: List[str] = expected_file.read().splitlines()

    assert code == constants.EXIT_SUCCESS
    assert "Evaluated 5 queries" in lines[0]
    # seconds per query depends on the machine
    assert [line for line in lines[1:] if not line.startswith("seconds per query,")] == expected


def test_trace_reports_inclusive_clip_indices(tmp_path, capsys) -> None:
    path: str = str(tmp_path / "trace.jsonl")

    code: int = _run("trace", _ZERO_POLICY, _FIXTURE_CORPUS, "--index", "0", "--out", path)

    out: str = capsys.readouterr().out
    assert code == constants.EXIT_SUCCESS
    assert "predicted clips [2, 5] of 8, penalized score 0.0000" in out
    assert "ground truth clips [2, 5] (tIoU 1.0000)" in out
    assert "[0, 5]" in out

    header, rows = read_trace(path)
    assert header.video_id == "fixture-exact"
    assert [row.best for row in rows] == [True, False, False, False]


def test_train_rejects_an_empty_corpus(tmp_path, config_path, capsys) -> None:
    corpus_path: str = str(tmp_path / "empty.jsonl")
    with open(corpus_path, "w", encoding="utf-8") as corpus_file:
        print(json.dumps({"format_version": 1, "sample_count": 0, "feature_dim": 2}), file=corpus_file)
    run_dir: str = str(tmp_path / "run")

    code: int = _run("train", corpus_path, "--config", config_path, "--run-dir", run_dir, "--no-progress")

    err: str = capsys.readouterr().err
    assert code == constants.EXIT_USAGE
    assert "CorpusValidationException" in err
    assert "empty.jsonl" in err
    assert not os.path.exists(run_dir)
