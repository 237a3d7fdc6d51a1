"""
module barground.verification

Contains the registry of gradient checks run by the gradcheck command: one case
per differentiable operation and per differentiable model component
"""

from .cases import gradcheck_cases_by_name
from .dataclasses import GradcheckCase, GradcheckResult
from .runner import run_gradchecks
