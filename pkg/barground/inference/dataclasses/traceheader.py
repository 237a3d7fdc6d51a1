from dataclasses import dataclass

from dataclasses_json import dataclass_json, Undefined


@dataclass_json(undefined=Undefined.RAISE)
@dataclass
class TraceHeader:
    """
    class TraceHeader

    First line of a trace file
    """

    schema_version: int
    video_id: str
    clip_count: int
    predicted_start: int
    predicted_end: int
    stopped: bool
