from enum import StrEnum, auto


class Baseline(StrEnum):
    """
    class Baseline

    Reference predictors: RANDOM refines with uniformly random actions and keeps
    the best penalized boundary; CENTER always predicts the initial boundary
    """

    RANDOM = auto()
    CENTER = auto()
