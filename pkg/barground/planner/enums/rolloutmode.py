from enum import StrEnum, auto


class RolloutMode(StrEnum):
    """
    class RolloutMode

    How a rollout picks its actions: sampled from the policy (training), the
    policy's argmax (inference) or uniformly at random (baseline)
    """

    SAMPLE = auto()
    GREEDY = auto()
    RANDOM = auto()
