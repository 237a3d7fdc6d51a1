"""
module barground.tables.recordset

Contains the definition of the RecordSet class, a dataclass holding the rows
of a report as tuples together with the names of their columns
"""

from dataclasses import dataclass
from typing import List, Tuple


@dataclass
class RecordSet:
    """
    class RecordSet

    Dataclass holding the rows of a report as tuples together with the names
    of their columns
    """

    columns: List[str]
    records: List[Tuple]
