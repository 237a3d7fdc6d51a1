"""
module barground.display.backends.console

Contains the definition of the colored console display backend
"""

from .consolebackend import ConsoleBackend
