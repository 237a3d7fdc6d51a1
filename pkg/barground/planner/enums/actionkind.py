from enum import IntEnum


class ActionKind(IntEnum):
    """
    class ActionKind

    The four primitive actions. Backward moves an endpoint toward clip 0,
    forward moves it toward clip N.
    """

    START_BACK = 0
    START_FWD = 1
    END_BACK = 2
    END_FWD = 3
