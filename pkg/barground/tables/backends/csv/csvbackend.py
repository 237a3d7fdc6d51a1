import csv
import io

from ...abstract import TableBackend
from ...recordset import RecordSet


class CsvBackend(TableBackend):
    # pylint: disable=too-few-public-methods

    def construct_table(self: "CsvBackend", record_set: RecordSet) -> str:
        output: io.StringIO = io.StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(record_set.columns)
        writer.writerows(record_set.records)

        return output.getvalue().rstrip("\n")
