"""
module barground.tables.backends.tabulate

Contains the definition of the tabulate table rendering backend
"""

from .tabulatebackend import TabulateBackend
