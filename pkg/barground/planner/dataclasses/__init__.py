"""
module barground.planner.dataclasses

Contains the values produced while the planner refines a boundary
"""

from .action import Action
from .plannerstate import PlannerState
from .policyoutput import PolicyOutput
from .trajectory import Trajectory
from .transition import Transition
