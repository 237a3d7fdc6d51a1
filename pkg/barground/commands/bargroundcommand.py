"""
module barground.commands.bargroundcommand

Contains the definition of the BarGroundCommand metaclass which is the base
class of all barground subcommands. Also contains the available_commands dict
which maps all command names to their respective classes.
"""

from abc import ABCMeta, abstractmethod
from argparse import ArgumentParser, Namespace
import copy
from typing import TYPE_CHECKING, Dict, List, Type

from Levenshtein import distance

from .. import constants
from ..config import RunConfig
from ..tables import RecordSet
from .exceptions import UnknownCommandException

if TYPE_CHECKING:
    from ..barground import BarGround

available_commands: Dict[str, Type["BarGroundCommand"]]


class BarGroundCommand(metaclass=ABCMeta):
    """
    class BarGroundCommand

    A metaclass which is the base class of all barground subcommands
    """

    __args: Namespace
    __parent: "BarGround"

    def __init__(self: "BarGroundCommand", args: List[str], parent: "BarGround") -> None:
        self.__args = self.argument_parser.parse_args(args)
        self.__parent = parent

    @property
    def args(self: "BarGroundCommand") -> Namespace:
        """
        Property that returns all of the argument values that were provided when
        the user invoked this command.

        Args:
            None

        Returns:
            Namespace: The argument values that were provided when the user invoked
                this command

        Raises:
            Nothing
        """

        return self.__args

    @property
    @abstractmethod
    def argument_parser(self: "BarGroundCommand") -> ArgumentParser:
        """
        Returns the argument parser for this specific BarGroundCommand subclass.

        Args:
            None

        Returns:
            ArgumentParser: The ArgumentParser that can be used to parse arguments
                for this command

        Raises:
            Nothing
        """

    @abstractmethod
    def execute(self: "BarGroundCommand") -> int:
        """
        Begins execution of the command implemented the BarGroundCommand subclass
        using the arguments that were passed during instantiation.

        Args:
            None

        Returns:
            int: The exit code of the command

        Raises:
            BarGroundException: Any exceptions thrown either directly by the command
            or by the library code it invokes
        """

    @classmethod
    def from_argv(
        cls: Type["BarGroundCommand"], argv: List[str], parent: "BarGround"
    ) -> "BarGroundCommand":
        """
        Looks up the subcommand named by the first element of argv and constructs
        it around the remaining arguments. The instance is ready to be run with
        execute()

        Args:
            argv (List[str]): The subcommand name followed by its arguments
            parent (BarGround): The session to register as the command's parent

        Returns:
            BarGroundCommand: A BarGroundCommand instance based on the user's input

        Raises:
            UnknownCommandException: If the command the user entered wasn't known
            InvalidArgumentException: If the arguments do not parse
        """

        target_command: str = argv[0].lower()

        # check if the command they entered is known. we do this case-insensitive
        if target_command in available_commands:
            return available_commands[target_command](args=argv[1:], parent=parent)

        # find the closest command based on edit distance. if it is close, we will
        # display a suggestion to the user
        closest_command: str
        closest_distance: int
        closest_command, closest_distance = min(
            (
                (command_name, distance(target_command, command_name))
                for command_name in available_commands
            ),
            key=lambda distance_tuple: distance_tuple[-1],
        )

        raise UnknownCommandException(
            f"Unknown command '{argv[0]}'"
            + (
                f" (did you mean '{closest_command}'?)"
                if closest_distance <= constants.COMMAND_SUGGESTION_MAX_DISTANCE
                else ""
            )
        )

    def base_config(self: "BarGroundCommand", config_path: str | None) -> RunConfig:
        """
        Returns a private copy of the configuration a command starts from: the
        file at config_path when one was given, otherwise the session's config

        Raises:
            ConfigException: If the file cannot be read or is invalid
        """

        if config_path is not None:
            return RunConfig.from_file(config_path)

        return copy.deepcopy(self.parent.context.config)

    def display_record_set(self: "BarGroundCommand", record_set: RecordSet) -> None:
        backends = self.parent.context.backends
        backends.display.display_table(backends.table.construct_table(record_set))

    @property
    def parent(self: "BarGroundCommand") -> "BarGround":
        """
        Returns the parent BarGround instance where this BarGroundCommand was invoked.

        Args:
            Nothing

        Returns:
            BarGround: The parent BarGround instance where this BarGroundCommand
                was invoked

        Raises:
            Nothing
        """

        return self.__parent


# pylint: disable=wrong-import-position
from .commandeval import CommandEval
from .commandgen import CommandGen
from .commandgradcheck import CommandGradcheck
from .commandhelp import CommandHelp
from .commandsweep import CommandSweep
from .commandtrace import CommandTrace
from .commandtrain import CommandTrain

available_commands: Dict[str, Type[BarGroundCommand]] = {
    "eval": CommandEval,
    "gen": CommandGen,
    "gradcheck": CommandGradcheck,
    "help": CommandHelp,
    "sweep": CommandSweep,
    "trace": CommandTrace,
    "train": CommandTrain,
}
