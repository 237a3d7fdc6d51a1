"""
module barground.commands.commandargumentparser

Contains the definition of the CommandArgumentParser class, the ArgumentParser
used by every barground command. It reports problems by raising instead of
exiting the interpreter.
"""

from argparse import ArgumentParser
import sys
from typing import NoReturn

from .. import constants
from .exceptions import HelpShown, InvalidArgumentException


class CommandArgumentParser(ArgumentParser):
    """
    class CommandArgumentParser

    ArgumentParser whose error() raises InvalidArgumentException and whose
    exit() (reached after -h/--help) raises HelpShown
    """

    def __init__(self: "CommandArgumentParser", command_name: str, description: str) -> None:
        super().__init__(
            prog=f"{constants.APPLICATION_NAME} {command_name}",
            description=description,
        )

    def error(self: "CommandArgumentParser", message: str) -> NoReturn:
        raise InvalidArgumentException(f"{self.prog}: {message}")

    def exit(self: "CommandArgumentParser", status: int = 0, message: str | None = None) -> NoReturn:
        if message:
            print(message, file=sys.stderr, end="")

        raise HelpShown()
