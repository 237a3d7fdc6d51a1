from typing import List

import pytest

from barground.autodiff import ops
from barground.autodiff.exceptions import ContractException
from barground.verification import GradcheckResult, gradcheck_cases_by_name, run_gradchecks


def test_every_operation_has_a_case() -> None:
    assert set(ops.functions_by_name) <= set(gradcheck_cases_by_name)


def test_every_case_passes() -> None:
    results: List[GradcheckResult] = run_gradchecks()

    failed: List[str] = [result.name for result in results if not result.passed]
    assert failed == []
    assert len(results) == len(gradcheck_cases_by_name)


@pytest.mark.parametrize("op", ["tanh", "matmul", "softmax", "l2_normalize"])
def test_a_broken_backward_is_caught(op) -> None:
    results: List[GradcheckResult] = run_gradchecks(names=[op], broken_op=op)

    assert not results[0].passed


def test_a_single_case_matches_its_registry_run() -> None:
    alone: GradcheckResult = run_gradchecks(names=["gru_step"])[0]
    together: GradcheckResult = next(
        result for result in run_gradchecks() if result.name == "gru_step"
    )

    assert alone.max_relative_error == together.max_relative_error


def test_unknown_names_are_rejected() -> None:
    with pytest.raises(ContractException):
        run_gradchecks(names=["no_such_case"])
    with pytest.raises(ContractException):
        run_gradchecks(broken_op="no_such_op")
