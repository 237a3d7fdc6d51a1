"""
module barground.verification.dataclasses

Contains dataclass definitions for gradient check cases and their results
"""

from .gradcheckcase import GradcheckCase
from .gradcheckresult import GradcheckResult
