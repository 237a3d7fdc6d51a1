import io

import pytest

from barground.config import TableBackendType
from barground.display.backends.console import ConsoleBackend
from barground.tables import RecordSet
from barground.tables.backends import table_backends_by_name
from barground.trainer import MetricsRecord, TrainingPhase

_RECORDS: RecordSet = RecordSet(
    columns=["threshold", "recall"],
    records=[("tIoU@0.5", "41.00%"), ("tIoU@0.7", None)],
)


def test_csv_tables() -> None:
    table: str = table_backends_by_name[TableBackendType.CSV]().construct_table(_RECORDS)

    assert table.splitlines() == ["threshold,recall", "tIoU@0.5,41.00%", "tIoU@0.7,"]


@pytest.mark.parametrize("backend_type", [TableBackendType.TABULATE, TableBackendType.TERMINAL_TABLES])
def test_boxed_tables_keep_preformatted_text(backend_type) -> None:
    table: str = table_backends_by_name[backend_type]().construct_table(_RECORDS)

    assert "threshold" in table
    assert "41.00%" in table


def test_metrics_records_skip_unset_fields() -> None:
    record: MetricsRecord = MetricsRecord(
        iteration=3,
        phase=TrainingPhase.A2C,
        loss=0.5,
        grad_norm=1.25,
        mean_reward=0.2,
        eval_tiou={"0.5": 0.25},
    )

    rows = dict(record.to_record_set().records)

    assert rows["phase"] == "a2c"
    assert rows["loss"] == "0.500000"
    assert rows["eval tIoU@0.5"] == "25.00%"
    assert "inter_loss" not in rows


def test_console_backend_separates_results_and_errors() -> None:
    out: io.StringIO = io.StringIO()
    err: io.StringIO = io.StringIO()
    console: ConsoleBackend = ConsoleBackend(out=out, err=err)

    console.display_table("a table")
    console.display_exception(ValueError("bad value"))

    assert "a table" in out.getvalue()
    assert "ValueError: bad value" in err.getvalue()
    assert "bad value" not in out.getvalue()
