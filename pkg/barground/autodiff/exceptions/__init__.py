"""
module barground.autodiff.exceptions

Contains definitions of all exceptions that are thrown directly by the
automatic differentiation core
"""

from .autodiffexception import AutodiffException
from .checkpointexception import CheckpointException
from .contractexception import ContractException
from .dimensionexception import DimensionException
