"""
Exact fixed-cardinality subset selection on a line instance.

SP mode is a max-plus dynamic program over the edge weight
phi(i, j) = tanh(q (t_j - t_i) / 2); MPD mode is the bottleneck (max-min)
program over the raw gaps t_j - t_i. Both run in O(k n^2) time and keep a
(k + 1) x n table with predecessor links.
"""
import enum
import itertools
import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple

import attr
import numpy as np

from spchain.utils.chain_geometry import LineInstance
from spchain.utils.exceptions import BadCardinality, BadIndices, TooLargeForBruteForce
from spchain.utils.magnitude import edge_weights, similarity_matrix, sp_exact

logger = logging.getLogger(__name__)

DEFAULT_MAX_BRUTE_N = 16
NO_PREDECESSOR = -1

# brute force only: ties between subsets scored by separate dense solves
ORACLE_TIE_TOLERANCE = 1e-12


class Objective(enum.Enum):
    SP = "sp"
    MPD = "mpd"

    def __str__(self):
        return self.value


@attr.s(frozen=True, eq=False)
class DpTable:
    """
    values[m, j]: best objective of an m-chain ending at j (row 0 unused);
    pred[m, j]: the predecessor attaining it, NO_PREDECESSOR if none.
    """

    values: np.ndarray = attr.ib()
    pred: np.ndarray = attr.ib()
    mode: Objective = attr.ib()

    @property
    def k(self) -> int:
        return self.values.shape[0] - 1

    @property
    def n(self) -> int:
        return self.values.shape[1]


@attr.s(frozen=True, eq=False)
class SelectionResult:
    indices: Tuple[int, ...] = attr.ib(converter=lambda v: tuple(int(x) for x in v))
    value: float = attr.ib(converter=float)
    objective: Objective = attr.ib(converter=Objective)
    q: Optional[float] = attr.ib(default=None)
    gap_contributions: Tuple[float, ...] = attr.ib(
        default=(), converter=lambda v: tuple(float(x) for x in v)
    )

    @property
    def k(self) -> int:
        return len(self.indices)


def _check_cardinality(inst: LineInstance, k: int) -> None:
    if not 1 <= k <= inst.n:
        raise BadCardinality(
            "cardinality k must satisfy 1 <= k <= n = {}, got {}".format(inst.n, k)
        )


def _check_indices(inst: LineInstance, indices: Sequence[int]) -> np.ndarray:
    array = np.asarray(indices, dtype=np.int64).ravel()
    if array.size == 0:
        raise BadIndices("subset is empty")
    if array[0] < 0 or array[-1] >= inst.n or not (np.diff(array) > 0).all():
        raise BadIndices(
            "indices must be strictly increasing within [0, {}), got {}".format(
                inst.n, list(array)
            )
        )
    return array


def _build_table(
    inst: LineInstance,
    k: int,
    mode: Objective,
    first_row: float,
    edge: Callable[[np.ndarray], np.ndarray],
    combine: Callable[[np.ndarray, np.ndarray], np.ndarray],
) -> DpTable:
    _check_cardinality(inst, k)
    n = inst.n
    values = np.full((k + 1, n), -np.inf)
    pred = np.full((k + 1, n), NO_PREDECESSOR, dtype=np.int64)
    values[1, :] = first_row

    if k >= 2:
        rows = np.arange(k - 1)
        for j in range(1, n):
            # candidates[m - 2, i] extends the best (m - 1)-chain ending at i by j
            candidates = combine(values[1:k, :j], edge(inst.t[j] - inst.t[:j])[None, :])
            # argmax keeps the smallest predecessor on exact ties
            best = np.argmax(candidates, axis=1)
            best_values = candidates[rows, best]
            reachable = best_values > -np.inf
            values[2:, j] = best_values
            pred[2:, j] = np.where(reachable, best, NO_PREDECESSOR)

    logger.debug("%s table filled: %d x %d", mode, k + 1, n)
    return DpTable(values=values, pred=pred, mode=mode)


def build_sp_table(inst: LineInstance, k: int) -> DpTable:
    q = inst.q
    return _build_table(
        inst,
        k,
        Objective.SP,
        first_row=0.0,
        edge=lambda gaps: edge_weights(gaps, q),
        combine=np.add,
    )


def build_mpd_table(inst: LineInstance, k: int) -> DpTable:
    return _build_table(
        inst,
        k,
        Objective.MPD,
        first_row=np.inf,
        edge=lambda gaps: gaps,
        combine=np.minimum,
    )


def backtrack(table: DpTable) -> List[int]:
    """
    Walks predecessor links back from the smallest terminal index attaining
    max_j values[k, j]
    """
    j = int(np.argmax(table.values[table.k]))
    chain = [j]
    for m in range(table.k, 1, -1):
        j = int(table.pred[m, j])
        chain.append(j)
    chain.reverse()
    return chain


def sp_contributions(inst: LineInstance, indices: Sequence[int]) -> np.ndarray:
    chosen = inst.t[_check_indices(inst, indices)]
    return edge_weights(np.diff(chosen), inst.q)


def sp_of_subset(inst: LineInstance, indices: Sequence[int]) -> float:
    value = 1.0
    for phi in sp_contributions(inst, indices):
        value += phi
    return float(value)


def mpd_of_subset(inst: LineInstance, indices: Sequence[int]) -> float:
    gaps = np.diff(inst.t[_check_indices(inst, indices)])
    return float(gaps.min()) if gaps.size else math.inf


def select_sp(inst: LineInstance, k: int) -> SelectionResult:
    table = build_sp_table(inst, k)
    indices = backtrack(table)
    contributions = sp_contributions(inst, indices)
    value = 1.0 + table.values[k, indices[-1]]
    logger.debug("SP selection %s with value %.17g", indices, value)
    return SelectionResult(
        indices=indices,
        value=value,
        objective=Objective.SP,
        q=inst.q,
        gap_contributions=contributions,
    )


def select_mpd(inst: LineInstance, k: int) -> SelectionResult:
    table = build_mpd_table(inst, k)
    indices = backtrack(table)
    value = table.values[k, indices[-1]]
    logger.debug("MPD selection %s with bottleneck %.17g", indices, value)
    return SelectionResult(
        indices=indices,
        value=value,
        objective=Objective.MPD,
        gap_contributions=np.diff(inst.t[indices]),
    )


def _oracle_sp(inst: LineInstance, subset: Tuple[int, ...]) -> float:
    value, _ = sp_exact(similarity_matrix(inst.t[list(subset)], inst.q))
    return value


def brute_force_select(
    inst: LineInstance,
    k: int,
    objective: Objective,
    max_n: int = DEFAULT_MAX_BRUTE_N,
) -> SelectionResult:
    """
    Exhaustive oracle: scores every k-subset and returns the lexicographically
    smallest optimizer. SP subsets are scored by dense solves only.
    """
    objective = Objective(objective)
    _check_cardinality(inst, k)
    if inst.n > max_n:
        raise TooLargeForBruteForce(
            "brute force is capped at n = {}, got n = {}".format(max_n, inst.n)
        )

    best_subset: Optional[Tuple[int, ...]] = None
    best_value = -math.inf
    for subset in itertools.combinations(range(inst.n), k):
        if objective is Objective.SP:
            value = _oracle_sp(inst, subset)
            better = value > best_value + ORACLE_TIE_TOLERANCE
        else:
            value = mpd_of_subset(inst, subset)
            better = value > best_value
        if best_subset is None or better:
            best_subset, best_value = subset, value

    logger.debug("brute force %s over n=%d, k=%d: %.17g", objective, inst.n, k, best_value)
    if objective is Objective.SP:
        return SelectionResult(
            indices=best_subset,
            value=best_value,
            objective=objective,
            q=inst.q,
            gap_contributions=sp_contributions(inst, best_subset),
        )
    return SelectionResult(
        indices=best_subset,
        value=best_value,
        objective=objective,
        gap_contributions=np.diff(inst.t[list(best_subset)]),
    )
