"""
module barground.context

Contains dataclass definitions related to the representation of the context
of an individual barground invocation
"""

from .backendset import BackendSet
from .bargroundcontext import BarGroundContext
