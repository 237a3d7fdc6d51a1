"""
module barground.context.bargroundcontext

Contains the definition of the BarGroundContext dataclass which holds the
backends and the active configuration of an individual barground invocation
"""

from dataclasses import dataclass

from .backendset import BackendSet
from ..config import RunConfig


@dataclass
class BarGroundContext:
    """
    class BarGroundContext

    Dataclass which holds the backends and the active configuration of an
    individual barground invocation. A command that loads a config file
    replaces config through BarGround.use_config().
    """

    backends: BackendSet
    config: RunConfig
