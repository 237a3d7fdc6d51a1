"""
module barground.autodiff.ops

Contains every differentiable operation, both as Function subclasses and as the
functional helpers used throughout barground. Also contains the functions_by_name
dict used by the gradient checker to address an operation by name.
"""

from typing import Dict, Type

from ..function import Function
from .activations import Exp, Relu, Sigmoid, Tanh, exp, relu, sigmoid, tanh
from .arithmetic import Add, MatMul, Mul, Scale, Sub, add, matmul, mul, scale, sub
from .dropout import Dropout, dropout
from .reductions import (
    L2Normalize,
    LogSoftmax,
    MeanPool,
    Softmax,
    Sum,
    l2_normalize,
    log_softmax,
    mean_pool,
    softmax,
    sum_all,
)
from .shaping import (
    Concat,
    Diagonal,
    Index,
    SliceRows,
    Stack,
    Transpose,
    concat,
    diagonal,
    index,
    slice_rows,
    stack,
    transpose,
)

functions_by_name: Dict[str, Type[Function]] = {
    "add": Add,
    "concat": Concat,
    "diagonal": Diagonal,
    "dropout": Dropout,
    "exp": Exp,
    "index": Index,
    "l2_normalize": L2Normalize,
    "log_softmax": LogSoftmax,
    "matmul": MatMul,
    "mean_pool": MeanPool,
    "mul": Mul,
    "relu": Relu,
    "scale": Scale,
    "sigmoid": Sigmoid,
    "slice_rows": SliceRows,
    "softmax": Softmax,
    "stack": Stack,
    "sub": Sub,
    "sum": Sum,
    "tanh": Tanh,
    "transpose": Transpose,
}
