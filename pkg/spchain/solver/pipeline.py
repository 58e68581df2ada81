"""
Detection -> reduction -> selection, as run by the management commands
"""
import logging

import numpy as np
from django.conf import settings

from spchain.solver.loaders import load_points
from spchain.solver.reports import RunConfig, RunReport, ValidationRecord
from spchain.utils.chain_geometry import (
    LineInstance,
    StaircaseReduction,
    detect_staircase,
    find_reduction_violation,
)
from spchain.utils.exceptions import BadCardinality, NumericalError
from spchain.utils.selection import Objective, brute_force_select, select_mpd, select_sp

logger = logging.getLogger(__name__)

SELECTORS = {
    Objective.SP: select_sp,
    Objective.MPD: select_mpd,
}


def reduce_points(points: np.ndarray) -> StaircaseReduction:
    """
    Detects a staircase ordering and checks it against every point pair
    """
    red = detect_staircase(points)
    violation = find_reduction_violation(points, red)
    if violation is not None:
        raise NumericalError(
            "line reduction fails pairwise verification between points {} and {}".format(
                violation[0] + 1, violation[1] + 1
            )
        )
    logger.info("reduced %d points with sign vector %s", red.n, red.sigma)
    return red


def cmd_reduce(config: RunConfig) -> RunReport:
    points = load_points(config.input_path)
    return RunReport(config=config, reduction=reduce_points(points))


def cmd_select(config: RunConfig) -> RunReport:
    if config.k is None:
        raise BadCardinality("selection needs a cardinality k")
    points = load_points(config.input_path)
    red = reduce_points(points)
    inst = LineInstance(t=red.t, q=config.q)
    result = SELECTORS[config.objective](inst, config.k)
    logger.info(
        "%s selection of %d out of %d points: value %.17g",
        config.objective,
        config.k,
        inst.n,
        result.value,
    )

    validation = None
    if config.validate:
        if inst.n <= config.max_brute_n:
            oracle = brute_force_select(
                inst, config.k, config.objective, max_n=config.max_brute_n
            )
            validation = ValidationRecord.compare(
                result.value, oracle.value, settings.SPCHAIN_VALIDATION_TOLERANCE
            )
            logger.info(
                "oracle value %.17g, |delta| = %.3e", oracle.value, validation.abs_delta
            )
        else:
            logger.warning(
                "validation skipped: n = %d exceeds the brute-force cap of %d",
                inst.n,
                config.max_brute_n,
            )
    return RunReport(config=config, reduction=red, selection=result, validation=validation)
