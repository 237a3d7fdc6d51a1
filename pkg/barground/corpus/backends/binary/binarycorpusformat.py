"""
module barground.corpus.backends.binary.binarycorpusformat

Contains the definition of the BinaryCorpusFormat class, the length-prefixed
little-endian corpus layout:

    header:  magic b"BARC", u32 format version, u32 sample count, u32 d_k
    sample:  u32 id length, utf-8 id, u32 N, u32 token count, u32 tokens...,
             u8 has-gt, [u32 gt start, u32 gt end], N * d_k f64 features
"""

import struct
from typing import List, Tuple

import numpy as np

from .... import constants
from ....extractor import Boundary
from ...abstract import CorpusFormat
from ...dataclasses import GroundingSample
from ...exceptions import CorpusException, CorpusParseException

MAGIC: bytes = b"BARC"

_U8: struct.Struct = struct.Struct("<B")
_U32: struct.Struct = struct.Struct("<I")
_F64_DTYPE: np.dtype = np.dtype("<f8")


class _Reader:
    """
    Cursor over a byte buffer that reports short reads with their byte offset
    """

    __buffer: bytes
    offset: int

    def __init__(self: "_Reader", buffer: bytes) -> None:
        self.__buffer = buffer
        self.offset = 0

    @property
    def exhausted(self: "_Reader") -> bool:
        return self.offset >= len(self.__buffer)

    def take(self: "_Reader", count: int, what: str) -> bytes:
        if self.offset + count > len(self.__buffer):
            raise CorpusParseException(
                f"Truncated corpus while reading {what}: needed {count} bytes, "
                f"{len(self.__buffer) - self.offset} remain",
                offset=self.offset,
            )

        chunk: bytes = self.__buffer[self.offset : self.offset + count]
        self.offset += count
        return chunk

    def u8(self: "_Reader", what: str) -> int:
        return _U8.unpack(self.take(_U8.size, what))[0]

    def u32(self: "_Reader", what: str) -> int:
        return _U32.unpack(self.take(_U32.size, what))[0]


class BinaryCorpusFormat(CorpusFormat):
    def read(self: "BinaryCorpusFormat", path: str) -> List[GroundingSample]:
        try:
            with open(path, "rb") as corpus_file:
                reader: _Reader = _Reader(corpus_file.read())
        except OSError as exc:
            raise CorpusException(f"Unable to read corpus '{path}': {exc}") from exc

        magic: bytes = reader.take(len(MAGIC), "magic")
        if magic != MAGIC:
            raise CorpusParseException(f"'{path}' is not a binary corpus file", offset=0)

        version: int = reader.u32("format version")
        if version != constants.CORPUS_FORMAT_VERSION:
            raise CorpusParseException(
                f"Unsupported corpus format version {version}", offset=len(MAGIC)
            )

        sample_count: int = reader.u32("sample count")
        feature_dim: int = reader.u32("feature dimension")

        samples: List[GroundingSample] = [
            self.__read_sample(reader, feature_dim, index) for index in range(sample_count)
        ]

        if not reader.exhausted:
            raise CorpusParseException(
                f"Trailing bytes after {sample_count} samples", offset=reader.offset
            )

        return samples

    def __read_sample(
        self: "BinaryCorpusFormat", reader: _Reader, feature_dim: int, index: int
    ) -> GroundingSample:
        start_offset: int = reader.offset
        id_length: int = reader.u32(f"id length of sample {index}")
        try:
            video_id: str = reader.take(id_length, f"id of sample {index}").decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusParseException(
                f"Sample {index} id is not valid utf-8", offset=start_offset
            ) from exc

        clip_count: int = reader.u32(f"clip count of '{video_id}'")
        token_count: int = reader.u32(f"token count of '{video_id}'")
        tokens: Tuple[int, ...] = tuple(
            reader.u32(f"tokens of '{video_id}'") for _ in range(token_count)
        )

        gt_segment: Boundary | None = None
        match reader.u8(f"ground-truth flag of '{video_id}'"):
            case 0:
                pass
            case 1:
                gt_segment = Boundary(
                    reader.u32(f"ground-truth start of '{video_id}'"),
                    reader.u32(f"ground-truth end of '{video_id}'"),
                )
            case flag:
                raise CorpusParseException(
                    f"Invalid ground-truth flag {flag} for '{video_id}'",
                    offset=reader.offset - 1,
                )

        feature_bytes: bytes = reader.take(
            clip_count * feature_dim * _F64_DTYPE.itemsize,
            f"feature block of '{video_id}'",
        )
        features: np.ndarray = (
            np.frombuffer(feature_bytes, dtype=_F64_DTYPE)
            .astype(np.float64)
            .reshape(clip_count, feature_dim)
        )

        return GroundingSample(
            video_id=video_id,
            clip_features=features,
            query_tokens=tokens,
            gt_segment=gt_segment,
        )

    def write(
        self: "BinaryCorpusFormat", samples: List[GroundingSample], path: str
    ) -> None:
        feature_dim: int = samples[0].feature_dim if samples else 0
        chunks: List[bytes] = [
            MAGIC,
            _U32.pack(constants.CORPUS_FORMAT_VERSION),
            _U32.pack(len(samples)),
            _U32.pack(feature_dim),
        ]

        for sample in samples:
            encoded_id: bytes = sample.video_id.encode("utf-8")
            chunks += [
                _U32.pack(len(encoded_id)),
                encoded_id,
                _U32.pack(sample.clip_count),
                _U32.pack(len(sample.query_tokens)),
                *(_U32.pack(token) for token in sample.query_tokens),
            ]
            if sample.gt_segment is None:
                chunks.append(_U8.pack(0))
            else:
                chunks += [
                    _U8.pack(1),
                    _U32.pack(sample.gt_segment.start),
                    _U32.pack(sample.gt_segment.end),
                ]
            chunks.append(np.ascontiguousarray(sample.clip_features, dtype=_F64_DTYPE).tobytes())

        try:
            with open(path, "wb") as corpus_file:
                corpus_file.write(b"".join(chunks))
        except OSError as exc:
            raise CorpusException(f"Unable to write corpus '{path}': {exc}") from exc
