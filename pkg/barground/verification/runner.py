"""
module barground.verification.runner

Contains run_gradchecks(), which runs registered gradient check cases and
optionally breaks one operation's backward() to show the checks catch it
"""

from contextlib import nullcontext
import logging
from typing import ContextManager, List, Sequence

import numpy as np

from .. import constants
from ..autodiff import broken_backward, check_gradients, eval_mode, ops
from ..autodiff.exceptions import ContractException
from .cases import gradcheck_cases_by_name
from .dataclasses import GradcheckResult

logger = logging.getLogger(__name__)


def run_gradchecks(
    names: Sequence[str] | None = None,
    seed: int = 0,
    step: float = constants.GRADCHECK_STEP,
    tolerance: float = constants.GRADCHECK_TOLERANCE,
    broken_op: str | None = None,
) -> List[GradcheckResult]:
    """
    Runs gradient check cases in registry order. Every case draws its inputs
    from its own generator seeded by (seed, case position), so a single case
    gives the same result alone or as part of the full registry.

    Args:
        names (Sequence[str] | None): Cases to run, all when None
        seed (int): Seed of the case inputs
        step (float): Finite-difference step h
        tolerance (float): Largest relative error that passes
        broken_op (str | None): Name of an operation in ops.functions_by_name
            whose gradients are scaled while the cases run

    Returns:
        List[GradcheckResult]: One result per case

    Raises:
        ContractException: If a case or operation name is unknown
    """

    selected: List[str] = list(gradcheck_cases_by_name) if names is None else list(names)
    unknown: List[str] = [name for name in selected if name not in gradcheck_cases_by_name]
    if unknown:
        raise ContractException(f"Unknown gradient check case(s): {', '.join(unknown)}")

    fault: ContextManager = nullcontext()
    if broken_op is not None:
        if broken_op not in ops.functions_by_name:
            raise ContractException(f"Unknown operation '{broken_op}'")

        logger.warning("injecting a broken backward() into '%s'", broken_op)
        fault = broken_backward(ops.functions_by_name[broken_op])

    positions: List[str] = list(gradcheck_cases_by_name)
    results: List[GradcheckResult] = []
    with fault, eval_mode():
        for name in selected:
            rng: np.random.Generator = np.random.default_rng([seed, positions.index(name)])
            loss_fn, targets = gradcheck_cases_by_name[name].build(rng)
            error: float = check_gradients(loss_fn, targets, step)

            logger.debug("gradcheck %s: max relative error %.3e", name, error)
            results.append(GradcheckResult(name=name, max_relative_error=error, tolerance=tolerance))

    return results
