"""
module barground.commands.exceptions

Contains all definitions of exceptions specifically thrown by barground
commands
"""

from .commandexception import CommandException
from .helpshown import HelpShown
from .invalidargumentexception import InvalidArgumentException
from .unknowncommandexception import UnknownCommandException
