"""
module barground.inference.trace

Contains export_trace() and read_trace(), which write and parse the
schema-versioned JSON-lines trace of one grounding: a TraceHeader line, then
one TraceRow per visited boundary
"""

import logging
import re
from typing import List, Tuple

from .. import constants
from .dataclasses import GroundingResult, TraceHeader, TraceRow
from .exceptions import TraceException

logger = logging.getLogger(__name__)


def trace_file_name(index: int, video_id: str) -> str:
    safe_id: str = re.sub(r"[^A-Za-z0-9_.-]", "_", video_id)
    return f"{index:05d}-{safe_id}.jsonl"


def export_trace(result: GroundingResult, path: str) -> None:
    """
    Writes the trace of a grounding to path

    Args:
        result (GroundingResult): A completed grounding
        path (str): The trace file to write

    Returns:
        Nothing

    Raises:
        TraceException: If the file cannot be written
    """

    header: TraceHeader = TraceHeader(
        schema_version=constants.TRACE_SCHEMA_VERSION,
        video_id=result.video_id,
        clip_count=result.clip_count,
        predicted_start=result.boundary.start,
        predicted_end=result.boundary.end,
        stopped=result.stopped,
    )
    rows: List[TraceRow] = [
        TraceRow(
            t=candidate.step,
            start=candidate.boundary.start,
            end=candidate.boundary.end,
            action=None if candidate.action is None else candidate.action.name,
            amplitude=candidate.amplitude,
            score=candidate.score,
            penalized_score=candidate.penalized_score,
            best=index == result.best_index,
        )
        for index, candidate in enumerate(result.candidates)
    ]

    try:
        with open(path, "w", encoding="utf-8") as trace_file:
            # pylint: disable=no-member
            print(header.to_json(), file=trace_file)
            for row in rows:
                print(row.to_json(), file=trace_file)
    except OSError as exc:
        raise TraceException(f"Unable to write trace '{path}': {exc}") from exc

    logger.debug("wrote %d trace rows to %s", len(rows), path)


def read_trace(path: str) -> Tuple[TraceHeader, List[TraceRow]]:
    """
    Parses a trace written by export_trace()

    Args:
        path (str): The trace file

    Returns:
        Tuple[TraceHeader, List[TraceRow]]: The header and the rows in step order

    Raises:
        TraceException: If the file cannot be read, is malformed or has another
            schema version
    """

    try:
        with open(path, "r", encoding="utf-8") as trace_file:
            lines: List[str] = [line for line in trace_file.read().splitlines() if line.strip()]
    except OSError as exc:
        raise TraceException(f"Unable to read trace '{path}': {exc}") from exc

    if not lines:
        raise TraceException(f"Trace '{path}' is empty")

    # pylint: disable=broad-exception-caught,no-member
    try:
        header: TraceHeader = TraceHeader.from_json(lines[0])
        rows: List[TraceRow] = [TraceRow.from_json(line) for line in lines[1:]]
    except Exception as exc:
        raise TraceException(f"Malformed trace '{path}': {exc}") from exc

    if header.schema_version != constants.TRACE_SCHEMA_VERSION:
        raise TraceException(
            f"Trace '{path}' has schema version {header.schema_version}, "
            f"expected {constants.TRACE_SCHEMA_VERSION}"
        )

    return header, rows
