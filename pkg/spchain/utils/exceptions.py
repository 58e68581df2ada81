"""
Errors raised by the chain solver.

Every error carries the exit code the command line reports for it, so the
management commands can hand it straight to ``CommandError``.
"""
from typing import Optional, Sequence, Tuple


class SolverError(Exception):
    exit_code = 1


##############################
# CONFIG (exit 2)
##############################


class ConfigError(SolverError):
    exit_code = 2


class NonPositiveQ(ConfigError):
    pass


class BadCardinality(ConfigError):
    pass


class TooLargeForBruteForce(ConfigError):
    pass


class UnknownFixture(ConfigError):
    pass


##############################
# DATA (exit 3)
##############################


class DataError(SolverError):
    exit_code = 3


class ParseError(DataError):
    def __init__(self, message: str, row: Optional[int] = None, column: Optional[int] = None):
        location = []
        if row is not None:
            location.append("row {}".format(row))
        if column is not None:
            location.append("column {}".format(column))
        if location:
            message = "{} ({})".format(message, ", ".join(location))
        super().__init__(message)
        self.row = row
        self.column = column


class DimensionError(DataError):
    pass


class DimensionMismatch(DimensionError):
    def __init__(self, message: str, row: Optional[int] = None):
        if row is not None:
            message = "{} at row {}".format(message, row)
        super().__init__(message)
        self.row = row


class NonFiniteValue(DataError):
    pass


class EmptyInput(DataError):
    pass


class DuplicatePoint(DataError):
    def __init__(self, pair: Tuple[int, int]):
        super().__init__("points {} and {} coincide".format(pair[0] + 1, pair[1] + 1))
        self.pair = pair


class NotMonotoneFront(DataError):
    def __init__(self, coordinate: int, pair: Tuple[int, int]):
        direction = "increasing" if coordinate == 0 else "decreasing"
        super().__init__(
            "coordinate {} is not strictly {} between points {} and {}".format(
                coordinate + 1, direction, pair[0] + 1, pair[1] + 1
            )
        )
        self.coordinate = coordinate
        self.pair = pair


class NonIncreasingInput(DataError):
    pass


class NonIncreasingPair(DataError):
    pass


class NonPositiveGap(DataError):
    pass


class BadIndices(DataError):
    pass


##############################
# GEOMETRY (exit 4)
##############################


class NotAStaircase(SolverError):
    exit_code = 4

    def __init__(self, coordinate: int, pair: Tuple[int, int], sigma: Sequence[int]):
        super().__init__(
            "no staircase ordering: coordinate {} backtracks between points {} and {} "
            "(sign vector {})".format(coordinate + 1, pair[0] + 1, pair[1] + 1, tuple(sigma))
        )
        self.coordinate = coordinate
        self.pair = pair
        self.sigma = tuple(sigma)


##############################
# NUMERICS (exit 5)
##############################


class NumericalError(SolverError):
    exit_code = 5


class SingularMatrix(NumericalError):
    def __init__(self, pivot_index: int, pivot: float):
        super().__init__(
            "similarity matrix is singular: pivot {} has magnitude {:.3e}".format(
                pivot_index, pivot
            )
        )
        self.pivot_index = pivot_index
        self.pivot = pivot
