from abc import ABCMeta, abstractmethod

from ..recordset import RecordSet


class TableBackend(metaclass=ABCMeta):
    # pylint: disable=too-few-public-methods

    @abstractmethod
    def construct_table(self: "TableBackend", record_set: RecordSet) -> str: ...
