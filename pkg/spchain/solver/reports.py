"""
Run configuration and the machine-readable run report
"""
import io
import json
import math
from typing import Any, Dict, Optional

import attr
import pandas as pd

import spchain
from spchain.utils.chain_geometry import StaircaseReduction
from spchain.utils.exceptions import BadCardinality, ConfigError
from spchain.utils.magnitude import check_q
from spchain.utils.selection import DEFAULT_MAX_BRUTE_N, Objective, SelectionResult

OUTPUT_FORMATS = ("json", "csv")
INDEX_BASE = 1
FLOAT_FORMAT = "%.17g"


def _as_objective(value) -> Objective:
    try:
        return Objective(value)
    except ValueError:
        raise ConfigError(
            "unknown objective {!r}, expected one of {}".format(
                value, ", ".join(o.value for o in Objective)
            )
        )


def _check_k(instance, attribute, value):
    if value is not None and value < 1:
        raise BadCardinality("cardinality k must be at least 1, got {}".format(value))


def _check_q(instance, attribute, value):
    check_q(value)


def _check_format(instance, attribute, value):
    if value not in OUTPUT_FORMATS:
        raise ConfigError(
            "unknown output format {!r}, expected one of {}".format(
                value, ", ".join(OUTPUT_FORMATS)
            )
        )


def _check_max_brute_n(instance, attribute, value):
    if value < 1:
        raise ConfigError("max brute-force size must be positive, got {}".format(value))


@attr.s(frozen=True)
class RunConfig:
    input_path: str = attr.ib(converter=str)
    objective: Objective = attr.ib(default=Objective.SP, converter=_as_objective)
    k: Optional[int] = attr.ib(default=None, validator=_check_k)
    q: float = attr.ib(default=1.0, converter=float, validator=_check_q)
    output_format: str = attr.ib(default="json", validator=_check_format)
    validate: bool = attr.ib(default=False, converter=bool)
    max_brute_n: int = attr.ib(default=DEFAULT_MAX_BRUTE_N, validator=_check_max_brute_n)
    index_base: int = attr.ib(default=INDEX_BASE, init=False)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "input_path": self.input_path,
            "objective": self.objective.value,
            "k": self.k,
            "q": self.q,
            "output_format": self.output_format,
            "validate": self.validate,
            "max_brute_n": self.max_brute_n,
            "index_base": self.index_base,
            "version": spchain.__version__,
        }


@attr.s(frozen=True)
class ValidationRecord:
    oracle_value: float = attr.ib()
    abs_delta: float = attr.ib()
    passed: bool = attr.ib()

    @classmethod
    def compare(cls, value: float, oracle_value: float, tolerance: float) -> "ValidationRecord":
        if math.isinf(value) and value == oracle_value:
            delta = 0.0
        else:
            delta = abs(value - oracle_value)
        return cls(oracle_value=oracle_value, abs_delta=delta, passed=delta <= tolerance)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "oracle_value": _number(self.oracle_value),
            "abs_delta": self.abs_delta,
            "pass": self.passed,
        }


def _number(value: float):
    """inf travels as the string "inf"; JSON has no infinity"""
    return "inf" if math.isinf(value) and value > 0 else value


@attr.s(frozen=True)
class RunReport:
    config: RunConfig = attr.ib()
    reduction: StaircaseReduction = attr.ib()
    selection: Optional[SelectionResult] = attr.ib(default=None)
    validation: Optional[ValidationRecord] = attr.ib(default=None)

    @property
    def rows(self):
        """selected points as 1-based rows of the input file"""
        return [self.reduction.order[i] + INDEX_BASE for i in self.selection.indices]

    def as_dict(self) -> Dict[str, Any]:
        selection = None
        if self.selection is not None:
            selection = {
                "rows": self.rows,
                "reduced_indices": [i + INDEX_BASE for i in self.selection.indices],
                "value": _number(self.selection.value),
                "objective": self.selection.objective.value,
                "gap_contributions": list(self.selection.gap_contributions),
            }
        return {
            "config": self.config.as_dict(),
            "reduction": {
                "order": [i + INDEX_BASE for i in self.reduction.order],
                "sigma": list(self.reduction.sigma),
                "t": list(self.reduction.t),
            },
            "selection": selection,
            "validation": self.validation.as_dict() if self.validation else None,
        }


def render_json(report: RunReport) -> str:
    return json.dumps(report.as_dict(), indent=2, allow_nan=False) + "\n"


def render_csv(report: RunReport) -> str:
    """
    One line per selected point, or per reduced point when nothing was selected
    """
    if report.selection is None:
        frame = pd.DataFrame(
            {
                "position": range(INDEX_BASE, report.reduction.n + INDEX_BASE),
                "row": [i + INDEX_BASE for i in report.reduction.order],
                "t": report.reduction.t,
            }
        )
    else:
        selection = report.selection
        frame = pd.DataFrame(
            {
                "rank": range(INDEX_BASE, selection.k + INDEX_BASE),
                "row": report.rows,
                "reduced_index": [i + INDEX_BASE for i in selection.indices],
                "t": [report.reduction.t[i] for i in selection.indices],
                "gap_contribution": [None] + list(selection.gap_contributions),
                "objective": selection.objective.value,
                "value": _number(selection.value),
            }
        )
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def render_report(report: RunReport) -> str:
    if report.config.output_format == "csv":
        return render_csv(report)
    return render_json(report)
