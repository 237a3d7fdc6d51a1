"""
module barground.trainer.enums.trainingphase

Contains the definition of the TrainingPhase enum
"""

from enum import StrEnum, auto


class TrainingPhase(StrEnum):
    """
    class TrainingPhase

    RANK optimizes the extractor and evaluator with the ranking loss, A2C
    optimizes the planner with the actor-critic loss and JOINT optimizes every
    parameter with both
    """

    RANK = auto()
    A2C = auto()
    JOINT = auto()

    @staticmethod
    def for_iteration(
        iteration: int, half_period: int, joint_update: bool = False
    ) -> "TrainingPhase":
        """
        Returns the phase of a 0-based iteration: K rank iterations, then K
        actor-critic iterations, repeating every 2K

        Args:
            iteration (int): The 0-based iteration
            half_period (int): K
            joint_update (bool): True to use the JOINT phase throughout

        Returns:
            TrainingPhase: The phase of the iteration

        Raises:
            Nothing
        """

        if joint_update:
            return TrainingPhase.JOINT
        if (iteration // half_period) % 2 == 0:
            return TrainingPhase.RANK

        return TrainingPhase.A2C
