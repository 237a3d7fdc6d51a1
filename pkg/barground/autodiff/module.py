"""
module barground.autodiff.module

Contains the definition of the Module class, the base class of every network
component. Modules register their parameters and child modules in attribute
assignment order, which makes parameter enumeration deterministic.
"""

from typing import Dict, Iterator, List, Tuple

import numpy as np

from .exceptions import CheckpointException
from .parameter import Parameter


class Module:
    """
    class Module

    Base class of every network component. Assigning a Parameter or a Module to
    an attribute registers it under the attribute's name.
    """

    _parameters: Dict[str, Parameter]
    _modules: Dict[str, "Module"]

    def __init__(self: "Module") -> None:
        object.__setattr__(self, "_parameters", {})
        object.__setattr__(self, "_modules", {})

    def __setattr__(self: "Module", name: str, value) -> None:
        if isinstance(value, Parameter):
            self._parameters[name] = value
        elif isinstance(value, Module):
            self._modules[name] = value

        object.__setattr__(self, name, value)

    def assign_names(self: "Module", prefix: str = "") -> None:
        """
        Stores each parameter's dotted path in its name attribute

        Args:
            prefix (str): Path prefix of this module within its parent

        Returns:
            Nothing

        Raises:
            Nothing
        """

        for name, parameter in self.named_parameters(prefix):
            parameter.name = name

    def load_state_dict(self: "Module", state: Dict[str, np.ndarray]) -> None:
        """
        Replaces the values of every parameter with the arrays in state

        Args:
            state (Dict[str, np.ndarray]): Parameter values by dotted name

        Returns:
            Nothing

        Raises:
            CheckpointException: If a name is missing, unexpected, or has a
                mismatched shape
        """

        own: Dict[str, Parameter] = dict(self.named_parameters())

        missing: List[str] = sorted(set(own) - set(state))
        unexpected: List[str] = sorted(set(state) - set(own))
        if missing or unexpected:
            raise CheckpointException(
                f"Checkpoint does not match the model (missing: {missing}, "
                f"unexpected: {unexpected})"
            )

        for name, parameter in own.items():
            if state[name].shape != parameter.shape:
                raise CheckpointException(
                    f"Shape mismatch for '{name}': checkpoint has {state[name].shape}, "
                    f"model has {parameter.shape}"
                )

            parameter.data = np.array(state[name], dtype=np.float64)

    def named_parameters(
        self: "Module", prefix: str = ""
    ) -> Iterator[Tuple[str, Parameter]]:
        for name, parameter in self._parameters.items():
            yield prefix + name, parameter
        for name, module in self._modules.items():
            yield from module.named_parameters(prefix + name + ".")

    def parameters(self: "Module") -> List[Parameter]:
        return [parameter for _, parameter in self.named_parameters()]

    def state_dict(self: "Module") -> Dict[str, np.ndarray]:
        return {name: parameter.data.copy() for name, parameter in self.named_parameters()}

    def zero_grad(self: "Module") -> None:
        for parameter in self.parameters():
            parameter.zero_grad()
