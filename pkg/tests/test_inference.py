import math
import os
from dataclasses import replace
from typing import List

import numpy as np
import pytest

from barground.autodiff.exceptions import ContractException
from barground.config import AblationConfig, InferenceConfig
from barground.extractor import Boundary
from barground.inference import (
    Baseline,
    Candidate,
    EvaluationReport,
    GroundingResult,
    best_candidate_index,
    evaluate,
    export_trace,
    ground,
    ground_center,
    penalize,
    read_trace,
    temporal_iou,
    trace_file_name,
)
from barground.inference.exceptions import TraceException
from barground.planner import RolloutMode


@pytest.fixture
def inference_config() -> InferenceConfig:
    return InferenceConfig(max_steps=3)


def test_penalty_of_a_long_segment() -> None:
    penalized: float = penalize(0.8, Boundary(0, 85), 100, 0.35, 0.5)

    assert penalized == pytest.approx(0.8 * math.exp(-0.5))


def test_penalty_is_neutral_at_the_baseline_length() -> None:
    assert penalize(0.6, Boundary(10, 45), 100, 0.35, 0.5) == pytest.approx(0.6)


def test_penalty_preserves_the_sign() -> None:
    penalized: float = penalize(-0.4, Boundary(0, 90), 100, 0.35, 0.5)

    assert -0.4 < penalized < 0.0


def test_infinite_modulation_disables_the_penalty() -> None:
    assert penalize(0.7, Boundary(0, 100), 100, 0.35, math.inf) == 0.7


@pytest.mark.parametrize("baseline_length", [20, 35, 50])
@pytest.mark.parametrize("modulation", [0.1, 0.5, 2.0])
@pytest.mark.parametrize("score", [0.9, 0.3, -0.7])
def test_penalty_never_grows_a_score(baseline_length, modulation, score) -> None:
    baseline: float = baseline_length / 100

    for length in range(1, 101):
        penalized: float = penalize(score, Boundary(0, length), 100, baseline, modulation)

        assert abs(penalized) <= abs(score)
        assert (abs(penalized) == abs(score)) == (length == baseline_length)
        assert math.copysign(1.0, penalized) == math.copysign(1.0, score)


def test_penalty_changes_which_candidate_wins() -> None:
    long_boundary: Boundary = Boundary(5, 95)
    short_boundary: Boundary = Boundary(30, 65)

    def candidate(step: int, boundary: Boundary, score: float, modulation: float) -> Candidate:
        return Candidate(
            step=step,
            boundary=boundary,
            score=score,
            penalized_score=penalize(score, boundary, 100, 0.35, modulation),
        )

    penalized: List[Candidate] = [
        candidate(0, long_boundary, 0.8, 0.5),
        candidate(1, short_boundary, 0.6, 0.5),
    ]
    raw: List[Candidate] = [
        candidate(0, long_boundary, 0.8, math.inf),
        candidate(1, short_boundary, 0.6, math.inf),
    ]

    assert penalized[0].penalized_score == pytest.approx(0.8 * math.exp(-0.3025 / 0.5))
    assert best_candidate_index(penalized) == 1
    assert best_candidate_index(raw) == 0


@pytest.mark.parametrize(
    "first,second,expected",
    [
        (Boundary(0, 10), Boundary(5, 15), 5 / 15),
        (Boundary(0, 10), Boundary(0, 10), 1.0),
        (Boundary(0, 10), Boundary(10, 20), 0.0),
        (Boundary(2, 4), Boundary(0, 10), 0.2),
    ],
)
def test_temporal_iou(first, second, expected) -> None:
    assert temporal_iou(first, second) == pytest.approx(expected)
    assert temporal_iou(second, first) == pytest.approx(expected)


def test_temporal_iou_of_an_empty_segment() -> None:
    with pytest.raises(ContractException):
        temporal_iou(Boundary(3, 3), Boundary(0, 10))


def test_grounding_examines_every_step_and_emits_one_segment(model, corpus, inference_config) -> None:
    result: GroundingResult = ground(model, corpus[0], inference_config)

    assert len(result.candidates) == inference_config.max_steps + 1
    assert result.candidates[0].step == 0
    assert result.candidates[0].action is None
    assert result.boundary.is_valid(corpus[0].clip_count)
    assert result.best_score == max(candidate.penalized_score for candidate in result.candidates)


def test_ties_go_to_the_earliest_candidate(model, corpus, inference_config) -> None:
    result: GroundingResult = ground(model, corpus[0], inference_config)
    best: float = result.best_score

    assert all(candidate.penalized_score < best for candidate in result.candidates[: result.best_index])


def test_grounding_is_deterministic(model, corpus, inference_config) -> None:
    first: GroundingResult = ground(model, corpus[1], inference_config)
    second: GroundingResult = ground(model, corpus[1], inference_config)

    assert first == second


def test_no_penalty_ranks_raw_scores(model, corpus, inference_config) -> None:
    result: GroundingResult = ground(
        model, corpus[0], inference_config, AblationConfig(no_penalty=True)
    )

    for candidate in result.candidates:
        assert candidate.penalized_score == candidate.score


def test_stop_threshold_predicts_the_boundary_it_stopped_at(model, corpus, inference_config) -> None:
    result: GroundingResult = ground(
        model, corpus[0], inference_config, AblationConfig(stop_threshold=-1.0)
    )

    assert result.stopped
    assert len(result.candidates) == 1
    assert result.best_index == 0


def test_random_baseline_moves_without_the_policy(model, corpus, inference_config) -> None:
    result: GroundingResult = ground(
        model, corpus[0], inference_config, mode=RolloutMode.RANDOM, rng=np.random.default_rng(4)
    )

    assert len(result.candidates) == inference_config.max_steps + 1


def test_center_baseline_predicts_the_initial_boundary(corpus) -> None:
    result: GroundingResult = ground_center(corpus[0])

    assert result.boundary == Boundary.initial(corpus[0].clip_count)
    assert math.isnan(result.best_score)


def test_evaluation_report(model, corpus, inference_config) -> None:
    report: EvaluationReport = evaluate(model, corpus, inference_config)

    assert report.evaluated == len(corpus)
    assert report.skipped == 0
    assert list(report.recall) == ["0.7", "0.5", "0.3"]
    assert report.recall["0.7"] <= report.recall["0.5"] <= report.recall["0.3"]
    assert 0.0 <= report.mean_iou <= 1.0
    assert report.max_candidates == inference_config.max_steps + 1


def test_evaluation_does_not_depend_on_workers(model, corpus, inference_config) -> None:
    single: EvaluationReport = evaluate(model, corpus, inference_config, workers=1)
    threaded: EvaluationReport = evaluate(model, corpus, inference_config, workers=3)

    assert single.recall == threaded.recall
    assert single.mean_iou == threaded.mean_iou
    assert single.correlation == threaded.correlation


def test_unlabeled_samples_are_skipped(model, corpus, inference_config) -> None:
    samples = [replace(corpus[0], gt_segment=None)] + corpus[1:]

    report: EvaluationReport = evaluate(model, samples, inference_config)

    assert report.skipped == 1
    assert report.evaluated == len(corpus) - 1


def test_center_baseline_needs_no_model(corpus, inference_config) -> None:
    report: EvaluationReport = evaluate(None, corpus, inference_config, baseline=Baseline.CENTER)

    assert report.correlation is None
    assert report.max_candidates == 1

    with pytest.raises(ContractException):
        evaluate(None, corpus, inference_config)


def test_report_tables(model, corpus, inference_config) -> None:
    report: EvaluationReport = evaluate(model, corpus, inference_config)

    recall = report.recall_record_set()
    assert recall.columns == ["threshold", "recall"]
    assert [row[0] for row in recall.records] == ["tIoU@0.7", "tIoU@0.5", "tIoU@0.3"]
    assert len(report.summary_record_set().records) == 6


def test_trace_lists_every_candidate(model, corpus, inference_config, tmp_path) -> None:
    result: GroundingResult = ground(model, corpus[0], inference_config)
    path: str = str(tmp_path / "trace.jsonl")

    export_trace(result, path)
    header, rows = read_trace(path)

    assert header.video_id == corpus[0].video_id
    assert (header.predicted_start, header.predicted_end) == (result.boundary.start, result.boundary.end)
    assert len(rows) == inference_config.max_steps + 1
    assert [row.t for row in rows] == list(range(inference_config.max_steps + 1))
    assert sum(row.best for row in rows) == 1
    assert rows[0].action is None


def test_evaluation_writes_one_trace_per_query(model, corpus, inference_config, tmp_path) -> None:
    evaluate(model, corpus, inference_config, trace_dir=str(tmp_path))

    names: List[str] = sorted(os.listdir(tmp_path))
    assert names == [trace_file_name(index, sample.video_id) for index, sample in enumerate(corpus)]


def test_trace_file_names_are_safe() -> None:
    assert trace_file_name(3, "clips/of a:video") == "00003-clips_of_a_video.jsonl"


def test_reading_a_trace_with_another_schema_fails(tmp_path) -> None:
    path = tmp_path / "trace.jsonl"
    path.write_text(
        '{"schema_version": 99, "video_id": "v", "clip_count": 8, '
        '"predicted_start": 0, "predicted_end": 4, "stopped": false}\n',
        encoding="utf-8",
    )

    with pytest.raises(TraceException):
        read_trace(str(path))
