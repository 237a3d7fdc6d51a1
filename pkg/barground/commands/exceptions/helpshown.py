"""
module barground.commands.exceptions.helpshown

Contains the definition of the HelpShown exception, thrown whenever usage
was printed for -h/--help and the requested command did not actually run
"""

from .commandexception import CommandException


class HelpShown(CommandException):
    """
    class HelpShown

    An exception class thrown whenever usage was printed for -h/--help and
    the requested command did not actually run
    """
