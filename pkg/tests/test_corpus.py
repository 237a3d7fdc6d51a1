from dataclasses import replace
from typing import List

import numpy as np
import pytest

from barground.config import CorpusConfig
from barground.config.exceptions import ConfigException
from barground.corpus import (
    GroundingSample,
    generate_synthetic,
    load_corpus,
    planted_recall,
    save_corpus,
    split,
    validate_corpus,
)
from barground.corpus.exceptions import (
    CorpusException,
    CorpusParseException,
    CorpusValidationException,
)
from barground.extractor import Boundary


def test_generation_is_deterministic(run_config) -> None:
    assert generate_synthetic(run_config.corpus) == generate_synthetic(run_config.corpus)


def test_generation_depends_on_the_seed(run_config) -> None:
    other: CorpusConfig = replace(run_config.corpus, seed=4)

    assert generate_synthetic(run_config.corpus) != generate_synthetic(other)


def test_generated_samples_respect_their_ranges(run_config, corpus) -> None:
    config: CorpusConfig = run_config.corpus

    assert len(corpus) == config.num_samples
    for sample in corpus:
        assert config.clip_count_min <= sample.clip_count <= config.clip_count_max
        assert sample.feature_dim == config.feature_dim
        assert config.query_length_min <= len(sample.query_tokens) <= config.query_length_max
        assert all(0 <= token < config.vocab_size for token in sample.query_tokens)
        assert sample.gt_segment.is_valid(sample.clip_count)


def test_planted_segments_are_separable() -> None:
    samples: List[GroundingSample] = generate_synthetic(CorpusConfig(num_samples=20, seed=1))

    assert planted_recall(samples, seed=1).fraction >= 0.95


def test_zero_signal_leaves_segments_indistinguishable() -> None:
    silent: List[GroundingSample] = generate_synthetic(
        CorpusConfig(num_samples=40, signal_to_noise=0.0, seed=1)
    )
    planted: List[GroundingSample] = generate_synthetic(CorpusConfig(num_samples=40, seed=1))

    assert 0.4 <= planted_recall(silent, seed=1).fraction <= 0.6
    for quiet, loud in zip(silent, planted):
        inside: np.ndarray = np.zeros(quiet.clip_count, dtype=bool)
        inside[quiet.gt_segment.start : quiet.gt_segment.end] = True

        # the same noise is drawn either way, only the planted rows differ
        assert quiet.gt_segment == loud.gt_segment
        assert np.array_equal(quiet.clip_features[~inside], loud.clip_features[~inside])
        assert not np.allclose(quiet.clip_features[inside], loud.clip_features[inside])


def test_inverted_segment_range_is_rejected() -> None:
    with pytest.raises(ConfigException):
        generate_synthetic(CorpusConfig(segment_fraction_min=0.5, segment_fraction_max=0.2))


@pytest.mark.parametrize("suffix", [".bin", ".jsonl"])
def test_corpus_files_preserve_samples(tmp_path, corpus, suffix) -> None:
    path: str = str(tmp_path / f"corpus{suffix}")

    save_corpus(corpus, path)

    assert load_corpus(path) == corpus


def test_unknown_suffix_is_rejected(tmp_path, corpus) -> None:
    with pytest.raises(CorpusException):
        save_corpus(corpus, str(tmp_path / "corpus.csv"))


def test_truncated_binary_corpus_is_a_parse_error(tmp_path, corpus) -> None:
    path = tmp_path / "corpus.bin"
    save_corpus(corpus, str(path))
    path.write_bytes(path.read_bytes()[:-7])

    with pytest.raises(CorpusParseException):
        load_corpus(str(path))


def test_validation_names_the_offending_sample() -> None:
    short: GroundingSample = GroundingSample(
        video_id="short-video", clip_features=np.zeros((3, 2)), query_tokens=(1,)
    )

    with pytest.raises(CorpusValidationException, match="short-video"):
        validate_corpus([short])


def test_validation_rejects_segments_outside_the_video() -> None:
    sample: GroundingSample = GroundingSample(
        video_id="v",
        clip_features=np.zeros((6, 2)),
        query_tokens=(1, 2),
        gt_segment=Boundary(2, 9),
    )

    with pytest.raises(CorpusValidationException):
        validate_corpus([sample])


def test_training_view_drops_the_ground_truth(corpus) -> None:
    view = corpus[0].training_view()

    assert not hasattr(view, "gt_segment")
    assert view.clip_count == corpus[0].clip_count


def test_split_of_500_samples() -> None:
    train, test = split(list(range(500)), 0.8, seed=0)

    assert (len(train), len(test)) == (400, 100)
    assert sorted(train + test) == list(range(500))
    assert split(list(range(500)), 0.8, seed=0) == (train, test)


def test_split_rejects_a_degenerate_fraction() -> None:
    with pytest.raises(ConfigException):
        split(list(range(10)), 1.0, seed=0)
