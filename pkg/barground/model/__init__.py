"""
module barground.model

Contains the GroundingModel class, which assembles the extractor, evaluator
and planner under one parameter registry
"""

from .groundingmodel import GroundingModel
from .loading import config_of, load_model
