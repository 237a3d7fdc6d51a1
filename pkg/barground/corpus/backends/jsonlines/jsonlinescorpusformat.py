"""
module barground.corpus.backends.jsonlines.jsonlinescorpusformat

Contains the definition of the JsonLinesCorpusFormat class, the human-editable
corpus layout: one CorpusHeader object on the first line, then one SampleRecord
object per line. Floats are written with their shortest round-trip repr, so
the format is lossless.
"""

import json
from typing import List

from .... import constants
from ...abstract import CorpusFormat
from ...dataclasses import CorpusHeader, GroundingSample, SampleRecord
from ...exceptions import CorpusException, CorpusParseException


class JsonLinesCorpusFormat(CorpusFormat):
    def read(self: "JsonLinesCorpusFormat", path: str) -> List[GroundingSample]:
        try:
            with open(path, "r", encoding="utf-8") as corpus_file:
                lines: List[str] = corpus_file.read().splitlines()
        except OSError as exc:
            raise CorpusException(f"Unable to read corpus '{path}': {exc}") from exc

        if not lines:
            raise CorpusParseException("Empty corpus file, expected a header", line=1)

        # pylint: disable=broad-exception-caught,no-member
        try:
            header: CorpusHeader = CorpusHeader.from_json(lines[0])
        except Exception as exc:
            raise CorpusParseException(f"Malformed corpus header: {exc}", line=1) from exc

        if header.format_version != constants.CORPUS_FORMAT_VERSION:
            raise CorpusParseException(
                f"Unsupported corpus format version {header.format_version}", line=1
            )

        body: List[str] = [line for line in lines[1:] if line.strip()]
        if len(body) != header.sample_count:
            raise CorpusParseException(
                f"Header announces {header.sample_count} samples but the file holds "
                f"{len(body)}",
                line=len(lines),
            )

        samples: List[GroundingSample] = []
        for line_number, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue

            try:
                record: SampleRecord = SampleRecord.from_json(line)
                sample: GroundingSample = record.to_sample()
            except Exception as exc:
                raise CorpusParseException(f"Malformed sample: {exc}", line=line_number) from exc

            if sample.clip_features.shape != (record.clip_count, header.feature_dim):
                raise CorpusParseException(
                    f"Feature block of '{record.video_id}' has shape "
                    f"{sample.clip_features.shape}, expected "
                    f"({record.clip_count}, {header.feature_dim})",
                    line=line_number,
                )

            samples.append(sample)

        return samples

    def write(
        self: "JsonLinesCorpusFormat", samples: List[GroundingSample], path: str
    ) -> None:
        header: CorpusHeader = CorpusHeader(
            format_version=constants.CORPUS_FORMAT_VERSION,
            sample_count=len(samples),
            feature_dim=samples[0].feature_dim if samples else 0,
        )

        try:
            with open(path, "w", encoding="utf-8") as corpus_file:
                # pylint: disable=no-member
                print(header.to_json(), file=corpus_file)
                for sample in samples:
                    print(
                        json.dumps(SampleRecord.from_sample(sample).to_dict()),
                        file=corpus_file,
                    )
        except OSError as exc:
            raise CorpusException(f"Unable to write corpus '{path}': {exc}") from exc
