"""
l1 geometry of ordered point sets.

A point set reduces to a line metric exactly when some ordering and sign
vector make every coordinate projection monotone. This module finds such a
staircase ordering, verifies it pairwise and turns it into a LineInstance.
"""
import itertools
import logging
from typing import Iterator, Optional, Sequence, Tuple

import attr
import numpy as np
from scipy.spatial.distance import cdist

from spchain.utils.exceptions import (
    BadIndices,
    DimensionError,
    DuplicatePoint,
    EmptyInput,
    NonFiniteValue,
    NotAStaircase,
    NotMonotoneFront,
)
from spchain.utils.magnitude import (
    as_line_coordinates,
    check_q,
    similarity_from_distances,
    sp_exact,
)

logger = logging.getLogger(__name__)

# absolute, on l1 distances
TOLERANCE = 1e-9

Point = Sequence[float]
SignVector = Tuple[int, ...]


def as_point_array(points) -> np.ndarray:
    """
    Returns points as a finite (n, d) float64 array
    """
    try:
        array = np.array(points, dtype=np.float64)
    except ValueError as excp:
        raise DimensionError("points do not share one dimension") from excp
    if array.ndim != 2:
        if array.size == 0:
            raise EmptyInput("no points given")
        raise DimensionError("expected a sequence of points, got shape {}".format(array.shape))
    if array.shape[0] == 0:
        raise EmptyInput("no points given")
    if array.shape[1] == 0:
        raise DimensionError("points must have at least one coordinate")
    if not np.isfinite(array).all():
        raise NonFiniteValue("point coordinates must be finite")
    return array


def _check_sigma(instance, attribute, value):
    if not value or any(s not in (-1, 1) for s in value):
        raise ValueError("sign vector entries must be -1 or +1")
    if value[0] != 1:
        raise ValueError("sign vector must start with +1")


def _check_increasing(instance, attribute, value):
    if any(b <= a for a, b in zip(value, value[1:])):
        raise ValueError("line coordinates must be strictly increasing")


@attr.s(frozen=True)
class StaircaseReduction:
    order: Tuple[int, ...] = attr.ib(converter=lambda v: tuple(int(x) for x in v))
    sigma: SignVector = attr.ib(
        converter=lambda v: tuple(int(x) for x in v), validator=_check_sigma
    )
    t: Tuple[float, ...] = attr.ib(
        converter=lambda v: tuple(float(x) for x in v), validator=_check_increasing
    )

    @t.validator
    def _check_length(self, attribute, value):
        if len(value) != len(self.order):
            raise ValueError("order and t must have the same length")

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def gaps(self) -> np.ndarray:
        return np.diff(np.asarray(self.t))


@attr.s(frozen=True, eq=False)
class LineInstance:
    """
    Strictly increasing candidate coordinates on a line plus the kernel parameter
    """

    t: np.ndarray = attr.ib(converter=as_line_coordinates)
    q: float = attr.ib(default=1.0, converter=float)

    @q.validator
    def _check_q(self, attribute, value):
        check_q(value)

    @property
    def n(self) -> int:
        return len(self.t)


def l1_distance(a: Point, b: Point) -> float:
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 1 or a.shape != b.shape:
        raise DimensionError(
            "cannot compare points of shape {} and {}".format(a.shape, b.shape)
        )
    return float(np.abs(a - b).sum())


def pairwise_l1(points) -> np.ndarray:
    array = as_point_array(points)
    return cdist(array, array, "cityblock")


def sign_vectors(d: int) -> Iterator[SignVector]:
    """
    Canonical sign vectors in lexicographic order, +1 before -1
    """
    for tail in itertools.product((1, -1), repeat=d - 1):
        yield (1,) + tail


def induced_line_coordinates(points, sigma: Sequence[int]) -> np.ndarray:
    array = as_point_array(points)
    if len(sigma) != array.shape[1]:
        raise DimensionError(
            "sign vector has {} entries for {}-dimensional points".format(
                len(sigma), array.shape[1]
            )
        )
    return (array * np.asarray(sigma, dtype=np.float64)).sum(axis=1)


def check_distinct(points) -> None:
    array = as_point_array(points)
    order = np.lexsort(array.T[::-1])
    ordered = array[order]
    same = np.all(ordered[1:] == ordered[:-1], axis=1)
    if same.any():
        r = int(np.argmax(same))
        a, b = sorted((int(order[r]), int(order[r + 1])))
        raise DuplicatePoint((a, b))


def _first_backtrack(signed: np.ndarray) -> Optional[Tuple[int, int]]:
    """
    (coordinate, position) of the first decrease in an already signed sequence
    """
    bad = np.diff(signed, axis=0) < 0
    if not bad.any():
        return None
    coordinate = int(np.argmax(bad.any(axis=0)))
    position = int(np.argmax(bad[:, coordinate]))
    return coordinate, position


def is_signed_monotone(points) -> bool:
    """
    Direct coordinate scan: every coordinate's nonzero increments share one sign
    """
    array = as_point_array(points)
    steps = np.diff(array, axis=0)
    rising = (steps > 0).any(axis=0)
    falling = (steps < 0).any(axis=0)
    return not bool((rising & falling).any())


def detect_staircase(points) -> StaircaseReduction:
    """
    Searches the canonical sign vectors for a staircase ordering of points.

    For every sign vector the points are sorted by their induced line
    coordinate (ties broken by the raw coordinates) and the sorted sequence
    is scanned for coordinate backtracking. The first sign vector that
    yields a strictly increasing, backtrack-free sequence wins.
    """
    array = as_point_array(points)
    check_distinct(array)
    n, d = array.shape

    certificate = None
    for sigma in sign_vectors(d):
        t = induced_line_coordinates(array, sigma)
        order = np.lexsort(tuple(array[:, ::-1].T) + (t,))
        backtrack = _first_backtrack(array[order] * np.asarray(sigma))
        ordered_t = t[order]
        if backtrack is None and np.all(np.diff(ordered_t) > 0):
            logger.debug("staircase found with sign vector %s for %d points", sigma, n)
            return StaircaseReduction(order=order, sigma=sigma, t=ordered_t)
        logger.debug("sign vector %s rejected", sigma)
        if certificate is None:
            if backtrack is None:
                # distinct points whose t collide under rounding
                position = int(np.argmax(np.diff(ordered_t) <= 0))
                pair = array[order[position]] != array[order[position + 1]]
                backtrack = (int(np.argmax(pair)), position)
            certificate = (sigma, order, backtrack)

    sigma, order, (coordinate, position) = certificate
    raise NotAStaircase(
        coordinate=coordinate,
        pair=(int(order[position]), int(order[position + 1])),
        sigma=sigma,
    )


def _check_permutation(order: Sequence[int], n: int) -> None:
    if sorted(order) != list(range(n)):
        raise BadIndices("order is not a permutation of {} point indices".format(n))


def find_reduction_violation(points, red: StaircaseReduction) -> Optional[Tuple[int, int]]:
    """
    Returns the first pair (original indices) whose l1 distance differs from
    its line distance, or None when the reduction holds for every pair
    """
    array = as_point_array(points)
    _check_permutation(red.order, len(array))
    ordered = array[list(red.order)]
    t = np.asarray(red.t)
    distances = cdist(ordered, ordered, "cityblock")
    i, j = np.triu_indices(len(t), k=1)
    bad = np.abs(distances[i, j] - (t[j] - t[i])) > TOLERANCE
    if not bad.any():
        return None
    first = int(np.argmax(bad))
    return red.order[i[first]], red.order[j[first]]


def verify_reduction(points, red: StaircaseReduction) -> bool:
    try:
        violation = find_reduction_violation(points, red)
    except BadIndices as excp:
        logger.debug("reduction rejected: %s", excp)
        return False
    if violation is not None:
        logger.debug("reduction broken between points %d and %d", *violation)
        return False
    return True


def additivity_check(points) -> bool:
    """
    True iff l1 distances along the given order add up over consecutive gaps
    """
    array = as_point_array(points)
    if len(array) <= 2:
        return True
    gaps = np.abs(np.diff(array, axis=0)).sum(axis=1)
    along = np.concatenate(([0.0], np.cumsum(gaps)))
    distances = cdist(array, array, "cityblock")
    i, j = np.triu_indices(len(array), k=2)
    return bool(np.all(np.abs(distances[i, j] - (along[j] - along[i])) <= TOLERANCE))


def pareto_line_coords(points) -> np.ndarray:
    """
    Line coordinates t = u - v of an ordered biobjective front
    """
    array = as_point_array(points)
    if array.shape[1] != 2:
        raise DimensionError(
            "a biobjective front needs 2 coordinates, got {}".format(array.shape[1])
        )
    u, v = array[:, 0], array[:, 1]
    rising = np.diff(u) > 0
    if not rising.all():
        r = int(np.argmin(rising))
        raise NotMonotoneFront(0, (r, r + 1))
    falling = np.diff(v) < 0
    if not falling.all():
        r = int(np.argmin(falling))
        raise NotMonotoneFront(1, (r, r + 1))
    return u - v


def line_instance(points, q: float = 1.0) -> Tuple[StaircaseReduction, LineInstance]:
    red = detect_staircase(points)
    return red, LineInstance(t=red.t, q=q)


def sp_of_points(points, q: float = 1.0) -> float:
    """
    Dense-oracle magnitude of an l1 point set, computed without any line reduction
    """
    value, _ = sp_exact(similarity_from_distances(pairwise_l1(points), q))
    return value
