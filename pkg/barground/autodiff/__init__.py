"""
module barground.autodiff

Contains the dense float64 reverse-mode automatic differentiation core that
every differentiable computation in barground is built on
"""

from .tensor import Tensor, as_tensor, backward
from .function import Function
from .graphmode import eval_mode, is_grad_enabled, is_training, no_grad, set_training, train_mode
from .parameter import Parameter
from .module import Module
from . import ops
from .layers import Embedding, GRUCell, Linear
from .optim import Adam
from .checkpoint import Checkpoint
from .gradcheck import broken_backward, check_gradients, numerical_gradient, relative_error
