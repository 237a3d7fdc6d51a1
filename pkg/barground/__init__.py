"""
module barground.__init__

Contains the import of the BarGround class that is used in barground.entrypoint to run
a command. Also contains definitions that indicate the current version of barground.
"""

__version_info__: tuple[int, ...] = (0, 1, 0)
__version__: str = ".".join(map(str, __version_info__))

from .barground import BarGround
