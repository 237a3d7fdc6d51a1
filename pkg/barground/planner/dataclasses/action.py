from dataclasses import dataclass

from ..enums import ActionKind


@dataclass(frozen=True)
class Action:
    """
    class Action

    One primitive action and the number of clips it shifts its endpoint by
    """

    kind: ActionKind
    amplitude_clips: int
