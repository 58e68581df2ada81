"""
Solow-Polasky diversity (magnitude) of ordered line chains.

Two independent routes to the same number: the dense solve of Z w = 1
(the oracle) and the closed form over consecutive gaps,
SP = 1 + sum_r tanh(q g_r / 2).
"""
import logging
import math
import warnings
from typing import Tuple

import attr
import numpy as np
from scipy import linalg

from spchain.utils.exceptions import (
    DimensionError,
    EmptyInput,
    NonFiniteValue,
    NonIncreasingInput,
    NonIncreasingPair,
    NonPositiveGap,
    NonPositiveQ,
    SingularMatrix,
)

logger = logging.getLogger(__name__)

PIVOT_THRESHOLD = 1e-12


def check_q(q: float) -> float:
    if not (math.isfinite(q) and q > 0):
        raise NonPositiveQ("kernel parameter q must be positive and finite, got {}".format(q))
    return q


def as_line_coordinates(t) -> np.ndarray:
    """
    Returns t as a read-only, finite, strictly increasing float64 vector
    """
    array = np.array(t, dtype=np.float64).ravel()
    if array.size == 0:
        raise EmptyInput("no line coordinates given")
    if not np.isfinite(array).all():
        raise NonFiniteValue("line coordinates must be finite")
    steps = np.diff(array)
    if not (steps > 0).all():
        r = int(np.argmin(steps > 0))
        raise NonIncreasingInput(
            "line coordinates must be strictly increasing: t[{}]={} >= t[{}]={}".format(
                r, array[r], r + 1, array[r + 1]
            )
        )
    array.setflags(write=False)
    return array


def _as_gaps(gaps) -> np.ndarray:
    array = np.array(gaps, dtype=np.float64).ravel()
    if not np.isfinite(array).all() or not (array > 0).all():
        raise NonPositiveGap("gaps must be positive and finite")
    array.setflags(write=False)
    return array


@attr.s(frozen=True, eq=False)
class GapVector:
    gaps: np.ndarray = attr.ib(converter=_as_gaps)
    q: float = attr.ib(default=1.0, converter=float)

    @q.validator
    def _check_q(self, attribute, value):
        check_q(value)

    @property
    def k(self) -> int:
        return len(self.gaps) + 1

    @property
    def decay(self) -> np.ndarray:
        """a_r = exp(-q g_r); underflows to 0 for q g_r > 745"""
        return np.exp(-self.q * self.gaps)


@attr.s(frozen=True, eq=False)
class WeightVector:
    w: np.ndarray = attr.ib(converter=lambda v: np.asarray(v, dtype=np.float64))

    @property
    def total(self) -> float:
        return float(self.w.sum())

    def __len__(self) -> int:
        return len(self.w)


def gap_vector(t, q: float = 1.0) -> GapVector:
    return GapVector(gaps=np.diff(as_line_coordinates(t)), q=q)


def similarity_from_distances(distances, q: float) -> np.ndarray:
    """
    Z_ij = exp(-q d_ij) for a symmetric distance matrix
    """
    check_q(q)
    distances = np.asarray(distances, dtype=np.float64)
    upper = np.triu(np.exp(-q * distances), k=1)
    similarity = upper + upper.T
    np.fill_diagonal(similarity, 1.0)
    return similarity


def similarity_matrix(t, q: float) -> np.ndarray:
    t = as_line_coordinates(t)
    check_q(q)
    return similarity_from_distances(np.abs(np.subtract.outer(t, t)), q)


def sp_exact(similarity) -> Tuple[float, WeightVector]:
    """
    Solves Z w = 1 by LU factorization with partial pivoting.

    One step of iterative refinement reuses the factors. Raises
    SingularMatrix when any pivot falls below PIVOT_THRESHOLD.
    """
    similarity = np.asarray(similarity, dtype=np.float64)
    if similarity.ndim != 2 or similarity.shape[0] != similarity.shape[1]:
        raise DimensionError(
            "similarity matrix must be square, got shape {}".format(similarity.shape)
        )
    with warnings.catch_warnings():
        # exact zero pivots are reported below
        warnings.simplefilter("ignore", linalg.LinAlgWarning)
        lu, piv = linalg.lu_factor(similarity)
    pivots = np.abs(np.diag(lu))
    if (pivots < PIVOT_THRESHOLD).any():
        index = int(np.argmin(pivots))
        logger.debug("rejecting %d x %d similarity matrix at pivot %d", *similarity.shape, index)
        raise SingularMatrix(index, float(pivots[index]))

    ones = np.ones(len(similarity))
    w = linalg.lu_solve((lu, piv), ones)
    w = w + linalg.lu_solve((lu, piv), ones - similarity @ w)
    weights = WeightVector(w)
    return weights.total, weights


def edge_weights(gaps, q: float) -> np.ndarray:
    """phi = tanh(q g / 2), elementwise over gaps"""
    return np.tanh(q * np.asarray(gaps, dtype=np.float64) / 2.0)


def sp_gap_formula(g: GapVector) -> float:
    return 1.0 + float(edge_weights(g.gaps, g.q).sum())


def chain_weights_closed_form(g: GapVector) -> WeightVector:
    """
    Endpoint weights 1/(1+a), interior weights 1/(1+a_{i-1}) + 1/(1+a_i) - 1
    """
    if g.k == 1:
        return WeightVector(np.ones(1))
    half = 1.0 / (1.0 + g.decay)
    w = np.empty(g.k)
    w[0] = half[0]
    w[-1] = half[-1]
    w[1:-1] = half[:-1] + half[1:] - 1.0
    return WeightVector(w)


def edge_weight(ti: float, tj: float, q: float) -> float:
    check_q(q)
    if not ti < tj:
        raise NonIncreasingPair("edge needs ti < tj, got {} and {}".format(ti, tj))
    return float(edge_weights(tj - ti, q))

