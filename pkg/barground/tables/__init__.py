"""
module barground.tables

Contains the RecordSet dataclass and the table rendering backends used
to show metric tables, gradcheck reports and sweep results
"""

from .recordset import RecordSet
