"""
module barground.trainer.exceptions.divergenceexception

Contains the definition of the DivergenceException class, an exception that is
thrown whenever a loss term becomes NaN or infinite
"""

from .trainingexception import TrainingException


class DivergenceException(TrainingException):
    """
    class DivergenceException

    An exception that is thrown whenever a loss term is not finite. Carries
    the step of the episode that produced it and, once written, the path of
    the diagnostic dump.
    """

    step: int | None
    dump_path: str | None

    def __init__(
        self: "DivergenceException",
        message: str,
        step: int | None = None,
        dump_path: str | None = None,
    ) -> None:
        super().__init__(message)
        self.step = step
        self.dump_path = dump_path
