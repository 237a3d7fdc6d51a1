"""
module barground.commands.commandhelp

Contains all definitions for the CommandHelp class which handles
execution when the user runs 'barground help ...'
"""

from argparse import ArgumentParser
from typing import List

from .. import constants
from . import bargroundcommand
from .commandargumentparser import CommandArgumentParser
from .exceptions import UnknownCommandException

_command_help_arg_parser: ArgumentParser = CommandArgumentParser(
    "help", "Show the usage of one command or of all commands"
)
_command_help_arg_parser.add_argument("command_name", type=str, nargs="?")


class CommandHelp(bargroundcommand.BarGroundCommand):
    """
    class CommandHelp

    Class that handles execution when the user runs 'barground help ...'
    """

    @property
    def argument_parser(self: "CommandHelp") -> ArgumentParser:
        return _command_help_arg_parser

    def _display_command_help(
        self: "CommandHelp", command_arg_parser: ArgumentParser
    ) -> None:
        help_lines: List[str] = command_arg_parser.format_help().splitlines()
        display = self.parent.context.backends.display

        display.display_message(
            help_lines[0][6:].strip()
            if help_lines[0].lower().startswith("usage:")
            else help_lines[0]
        )

        for help_line in help_lines[1:]:
            display.display_info(help_line)

    def execute(self: "CommandHelp") -> int:
        if self.args.command_name is None:
            for command_name in sorted(bargroundcommand.available_commands):
                self._show_help_for_command(command_name)
                self.parent.context.backends.display.display_info("")
        else:
            self._show_help_for_command(self.args.command_name.lower())

        return constants.EXIT_SUCCESS

    def _show_help_for_command(self: "CommandHelp", command_name: str) -> None:
        if command_name not in bargroundcommand.available_commands:
            raise UnknownCommandException(
                f"Unable to show help for unknown command '{command_name}'"
            )

        # the argument_parser property is read off the class, without an instance
        command_arg_parser: ArgumentParser = bargroundcommand.available_commands[
            command_name
        ].argument_parser.fget(
            None
        )  # type: ignore

        self._display_command_help(command_arg_parser)
