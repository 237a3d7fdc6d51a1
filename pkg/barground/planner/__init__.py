"""
module barground.planner

Contains the adaptive action planner: the action space, the amplitude factor,
the actor-critic network and episode rollouts
"""

from .actionplanner import ActionPlanner
from .amplitude import amplitude, apply_action, shift_clips
from .dataclasses import Action, PlannerState, PolicyOutput, Trajectory, Transition
from .enums import ActionKind, RolloutMode
from .rollout import rollout
