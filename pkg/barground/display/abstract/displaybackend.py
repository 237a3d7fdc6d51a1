"""
module barground.display.abstract.displaybackend

Contains the definition of the DisplayBackend class, an abstract base class that
is extended by every way barground can show output to the user
"""

from abc import ABCMeta, abstractmethod


class DisplayBackend(metaclass=ABCMeta):
    """
    class DisplayBackend

    Abstract base class that is extended by every way barground can show output
    to the user
    """

    @abstractmethod
    def display_exception(
        self: "DisplayBackend", exception: BaseException, unhandled: bool = False
    ) -> None:
        """
        Displays an exception that ended a command

        Args:
            exception (BaseException): The exception to display
            unhandled (bool): Represents whether or not the exception
                was considered unhandled. A full traceback will be
                displayed in the exception was unhandled

        Returns:
            None

        Raises:
            Nothing
        """

    @abstractmethod
    def display_info(self: "DisplayBackend", info: str) -> None:
        """
        Displays a plain informational line to the user

        Args:
            info (str): The message to be displayed

        Returns:
            None

        Raises:
            Nothing
        """

    @abstractmethod
    def display_message(self: "DisplayBackend", message: str) -> None:
        """
        Displays a highlighted result line, such as the path of a file that was
        written or the verdict of a check

        Args:
            message (str): The message to be displayed

        Returns:
            None

        Raises:
            Nothing
        """

    @abstractmethod
    def display_table(self: "DisplayBackend", table: str) -> None: ...
