"""
module barground.tables.backends.terminaltables

Contains the definition of the terminaltables table rendering
backend
"""

from .terminaltablesbackend import TerminalTablesBackend
