"""
module barground.autodiff.optim.adam

Contains the definition of the Adam class, the Adam optimizer with global
gradient-norm clipping
"""

import logging
import math
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..exceptions import CheckpointException
from ..parameter import Parameter

logger = logging.getLogger(__name__)


class Adam:
    """
    class Adam

    Adam optimizer over a fixed group of named parameters. Only the parameters
    in the group are ever written, which is what freezes the others.
    """

    __parameters: List[Parameter]
    __lr: float
    __betas: Tuple[float, float]
    __eps: float
    __grad_clip: float | None
    __step: int
    __first_moments: Dict[str, np.ndarray]
    __second_moments: Dict[str, np.ndarray]

    def __init__(
        self: "Adam",
        parameters: Sequence[Parameter],
        lr: float = 1e-3,
        betas: Tuple[float, float] = (0.9, 0.999),
        eps: float = 1e-8,
        grad_clip: float | None = 5.0,
    ) -> None:
        self.__parameters = list(parameters)
        self.__lr = lr
        self.__betas = betas
        self.__eps = eps
        self.__grad_clip = grad_clip
        self.__step = 0
        self.__first_moments = {
            parameter.name: np.zeros_like(parameter.data) for parameter in self.__parameters
        }
        self.__second_moments = {
            parameter.name: np.zeros_like(parameter.data) for parameter in self.__parameters
        }

    @property
    def parameters(self: "Adam") -> List[Parameter]:
        return self.__parameters

    @property
    def step_count(self: "Adam") -> int:
        return self.__step

    def grad_norm(self: "Adam") -> float:
        """
        Computes the global Euclidean norm of the gradients of the group
        """

        total: float = 0.0
        for parameter in self.__parameters:
            if parameter.grad is not None:
                total += float(np.sum(parameter.grad * parameter.grad))

        return math.sqrt(total)

    def step(self: "Adam") -> float:
        """
        Applies one Adam update to every parameter of the group that holds a
        gradient. Parameters are updated in group order.

        Args:
            None

        Returns:
            float: The global gradient norm before clipping

        Raises:
            Nothing
        """

        norm: float = self.grad_norm()
        clip_scale: float = 1.0
        if self.__grad_clip is not None and norm > self.__grad_clip:
            clip_scale = self.__grad_clip / norm
            logger.debug("clipping gradient norm %.4f to %.4f", norm, self.__grad_clip)

        self.__step += 1
        beta1, beta2 = self.__betas
        first_correction: float = 1.0 - beta1**self.__step
        second_correction: float = 1.0 - beta2**self.__step

        for parameter in self.__parameters:
            if parameter.grad is None:
                continue

            grad: np.ndarray = parameter.grad * clip_scale
            first: np.ndarray = beta1 * self.__first_moments[parameter.name] + (1.0 - beta1) * grad
            second: np.ndarray = (
                beta2 * self.__second_moments[parameter.name] + (1.0 - beta2) * grad * grad
            )
            self.__first_moments[parameter.name] = first
            self.__second_moments[parameter.name] = second

            parameter.data = parameter.data - self.__lr * (first / first_correction) / (
                np.sqrt(second / second_correction) + self.__eps
            )

        return norm

    def zero_grad(self: "Adam") -> None:
        for parameter in self.__parameters:
            parameter.zero_grad()

    def state_dict(self: "Adam") -> Dict[str, np.ndarray]:
        state: Dict[str, np.ndarray] = {"step": np.asarray(self.__step, dtype=np.int64)}
        for name, moment in self.__first_moments.items():
            state[f"m.{name}"] = moment.copy()
        for name, moment in self.__second_moments.items():
            state[f"v.{name}"] = moment.copy()

        return state

    def load_state_dict(self: "Adam", state: Dict[str, np.ndarray]) -> None:
        """
        Restores the step counter and moment estimates saved by state_dict()

        Args:
            state (Dict[str, np.ndarray]): The saved optimizer state

        Returns:
            Nothing

        Raises:
            CheckpointException: If the state does not cover this group
        """

        if "step" not in state:
            raise CheckpointException("Optimizer state is missing its step counter")

        for parameter in self.__parameters:
            for prefix in ("m", "v"):
                key: str = f"{prefix}.{parameter.name}"
                if key not in state or state[key].shape != parameter.shape:
                    raise CheckpointException(
                        f"Optimizer state does not match parameter '{parameter.name}'"
                    )

        self.__step = int(state["step"])
        for parameter in self.__parameters:
            self.__first_moments[parameter.name] = np.array(state[f"m.{parameter.name}"])
            self.__second_moments[parameter.name] = np.array(state[f"v.{parameter.name}"])
