"""
module barground.autodiff.optim

Contains the optimizers that update model parameters from their gradients
"""

from .adam import Adam
