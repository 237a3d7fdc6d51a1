"""
module barground.commands.exceptions.unknowncommandexception

Contains the definition of the UnknownCommandException class which is
thrown when the name of the requested subcommand is not known
"""

from .commandexception import CommandException


class UnknownCommandException(CommandException):
    """
    class UnknownCommandException

    An exception thrown when the name of the requested subcommand is not known
    """
