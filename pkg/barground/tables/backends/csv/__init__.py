"""
module barground.tables.backends.csv

Contains the definition of the csv table rendering backend
"""

from .csvbackend import CsvBackend
