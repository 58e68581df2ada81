"""
Point set ingestion from CSV and JSON files
"""
import json
import logging
import math
import re
from pathlib import Path
from typing import List

import numpy as np
import pandas as pd

from spchain.utils.exceptions import (
    DimensionMismatch,
    EmptyInput,
    NonFiniteValue,
    ParseError,
)

logger = logging.getLogger(__name__)

PANDAS_FIELD_COUNT = re.compile(r"Expected (\d+) fields in line (\d+), saw (\d+)")


def _as_number(cell: str, row: int, column: int) -> float:
    try:
        value = float(cell)
    except (TypeError, ValueError):
        raise ParseError("{!r} is not a number".format(cell), row=row, column=column)
    if not math.isfinite(value):
        raise NonFiniteValue("non-finite value {!r} at row {}, column {}".format(cell, row, column))
    return value


def _is_missing(cell) -> bool:
    return not isinstance(cell, str) or cell.strip() == ""


def _is_numeric_row(cells: List[str]) -> bool:
    try:
        [float(cell) for cell in cells]
    except (TypeError, ValueError):
        return False
    return True


def _read_csv(path: Path) -> np.ndarray:
    try:
        frame = pd.read_csv(
            path,
            header=None,
            dtype=str,
            na_filter=False,
            skip_blank_lines=False,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError:
        raise EmptyInput("{} contains no points".format(path))
    except pd.errors.ParserError as excp:
        match = PANDAS_FIELD_COUNT.search(str(excp))
        if match:
            expected, line, seen = (int(x) for x in match.groups())
            raise DimensionMismatch(
                "expected {} columns, found {}".format(expected, seen), row=line
            )
        raise ParseError(str(excp))

    rows = []
    header_checked = False
    for position, record in enumerate(frame.itertuples(index=False, name=None)):
        row = position + 1
        cells = list(record)
        while cells and _is_missing(cells[-1]):
            cells.pop()
        if not cells:
            continue
        if not header_checked:
            header_checked = True
            if not _is_numeric_row(cells):
                logger.debug("treating row %d of %s as header", row, path)
                continue
        if rows and len(cells) != len(rows[0]):
            raise DimensionMismatch(
                "expected {} columns, found {}".format(len(rows[0]), len(cells)), row=row
            )
        rows.append([_as_number(cell, row, column + 1) for column, cell in enumerate(cells)])

    if not rows:
        raise EmptyInput("{} contains no points".format(path))
    return np.array(rows, dtype=np.float64)


def _read_json(path: Path) -> np.ndarray:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as excp:
        raise ParseError(excp.msg, row=excp.lineno, column=excp.colno)
    if not isinstance(data, list):
        raise ParseError("expected an array of points")
    if not data:
        raise EmptyInput("{} contains no points".format(path))

    rows = []
    for position, point in enumerate(data):
        row = position + 1
        if not isinstance(point, list) or not point:
            raise ParseError("expected a non-empty array of numbers", row=row)
        if rows and len(point) != len(rows[0]):
            raise DimensionMismatch(
                "expected {} coordinates, found {}".format(len(rows[0]), len(point)), row=row
            )
        values = []
        for column, value in enumerate(point, start=1):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ParseError("{!r} is not a number".format(value), row=row, column=column)
            if not math.isfinite(value):
                raise NonFiniteValue(
                    "non-finite value at row {}, column {}".format(row, column)
                )
            values.append(float(value))
        rows.append(values)
    return np.array(rows, dtype=np.float64)


def load_points(path) -> np.ndarray:
    """
    Loads an (n, d) point array. ``.json`` files hold an array of equal-length
    numeric arrays; anything else is read as CSV with an optional header row.
    """
    path = Path(path)
    if not path.is_file():
        raise ParseError("input file {} does not exist".format(path))
    if path.suffix.lower() == ".json":
        points = _read_json(path)
    else:
        points = _read_csv(path)
    logger.info("loaded %d points of dimension %d from %s", *points.shape, path)
    return points
