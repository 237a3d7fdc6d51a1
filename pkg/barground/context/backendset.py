"""
module barground.context.backendset

Contains the definition of the BackendSet dataclass which stores the set of
output backends an individual barground invocation depends on
"""

from dataclasses import dataclass

from ..display.abstract import DisplayBackend
from ..tables.abstract import TableBackend


@dataclass
class BackendSet:
    """
    class BackendSet

    Dataclass which stores the set of output backends an individual barground
    invocation depends on
    """

    display: DisplayBackend
    table: TableBackend
