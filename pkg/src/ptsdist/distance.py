"""Approximated behavioural distances via an iterated transportation problem.

Starting from the zero matrix, each sweep re-prices the transport cost matrix
with the discounted previous iterate (border costs to the virtual termination
state stay 1) and re-solves one transportation problem per state pair.  After
ceil(log_discount(accuracy / 2)) sweeps every entry is within `accuracy` of the
true discounted behavioural distance, entries are in [0, 1], the diagonal is 0
and the matrix is exactly symmetric.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ptsdist import pts as pts_mod
from ptsdist.pts import Pts, StateId, extended_row
from ptsdist.transport import solve_objective

ITERATION_CAP = 10**6


@dataclass(frozen=True)
class DistanceParams:
    """Discount weights multi-step behaviour; accuracy bounds the final error."""

    discount: float = 0.9
    accuracy: float = 0.01

    def __post_init__(self) -> None:
        if not 0.0 < self.discount < 1.0:
            raise ValueError(f"discount must lie in (0, 1), got {self.discount!r}")
        if not 0.0 < self.accuracy <= 1.0:
            raise ValueError(f"accuracy must lie in (0, 1], got {self.accuracy!r}")

    @property
    def iterations(self) -> int:
        """Number of sweeps: ceil(log_discount(accuracy / 2)), capped."""
        n = math.ceil(math.log(self.accuracy / 2.0) / math.log(self.discount))
        if n > ITERATION_CAP:
            raise ValueError(
                f"discount {self.discount!r} and accuracy {self.accuracy!r} "
                f"require {n} sweeps (cap {ITERATION_CAP})"
            )
        return max(1, n)


@dataclass(frozen=True)
class DistanceMatrix:
    """Approximated pairwise behavioural distances plus the run parameters."""

    labels: tuple[str, ...]
    values: np.ndarray
    discount: float
    accuracy: float
    iterations: int


def cost_matrix(d_prev: np.ndarray, discount: float) -> np.ndarray:
    """(N+1)x(N+1) shipping costs: 0 at (0,0), 1 on the borders, discounted
    previous distances inside."""
    n = d_prev.shape[0]
    cost = np.ones((n + 1, n + 1))
    cost[0, 0] = 0.0
    cost[1:, 1:] = discount * d_prev
    return cost


def min_value(
    pts: Pts, d_prev: np.ndarray, params: DistanceParams, k: StateId, l: StateId
) -> float:
    """One transportation evaluation of the pair (k, l) against `d_prev`.

    Demand is state k's extended row, supply state l's; the optimum is
    symmetric in (k, l) because the cost matrix is symmetric.
    """
    demand = np.asarray(extended_row(pts, k), dtype=float)
    supply = np.asarray(extended_row(pts, l), dtype=float)
    cost = cost_matrix(np.asarray(d_prev, dtype=float), params.discount)
    return min(1.0, max(0.0, solve_objective(supply, demand, cost)))


# Worker-side state for the process pool: extended rows and the pair chunks are
# shipped once at pool start; only the cost matrix travels per sweep.
_POOL_STATE: dict = {}


def _init_pool(rows, chunks) -> None:
    _POOL_STATE["rows"] = rows
    _POOL_STATE["chunks"] = chunks


def _solve_chunk(task):
    chunk_id, cost_rows = task
    rows = _POOL_STATE["rows"]
    out = []
    for k, l in _POOL_STATE["chunks"][chunk_id]:
        v = solve_objective(rows[l], rows[k], cost_rows)
        out.append(min(1.0, max(0.0, v)))
    return out


def distance_iterates(pts: Pts, params: DistanceParams, threads: int = 1):
    """Yield every sweep of the fixed-point iteration, last one included.

    All pair solves within a sweep read only the previous iterate, so with
    threads > 1 they are fanned out over worker processes; results are placed
    by pair index, making output identical in both modes.
    """
    n = pts.num_states
    rows = [np.asarray(extended_row(pts, i), dtype=float) for i in pts.state_ids]
    # Pairs with identical extended rows stay at distance 0 in every sweep
    # (identity transport over a zero-diagonal cost matrix), so skip solving.
    pairs = [
        (k, l)
        for k in range(n)
        for l in range(k + 1, n)
        if not np.array_equal(rows[k], rows[l])
    ]
    pool = None
    chunks: list[list[tuple[int, int]]] = []
    # 0-based matrix indices; rows list is also 0-based here.
    d = np.zeros((n, n))
    try:
        if threads > 1 and len(pairs) > threads:
            workers = min(threads, len(pairs))
            step = -(-len(pairs) // workers)
            chunks = [pairs[i : i + step] for i in range(0, len(pairs), step)]
            pool = ProcessPoolExecutor(
                max_workers=len(chunks), initializer=_init_pool, initargs=(rows, chunks)
            )
        for _ in range(params.iterations):
            cost_rows = cost_matrix(d, params.discount)
            new = np.zeros((n, n))
            if pool is None:
                for k, l in pairs:
                    v = solve_objective(rows[l], rows[k], cost_rows)
                    new[k, l] = new[l, k] = min(1.0, max(0.0, v))
            else:
                tasks = [(i, cost_rows) for i in range(len(chunks))]
                for chunk_id, values in enumerate(pool.map(_solve_chunk, tasks)):
                    for (k, l), v in zip(chunks[chunk_id], values):
                        new[k, l] = new[l, k] = v
            d = new
            yield d
    finally:
        if pool is not None:
            pool.shutdown()


def distance_matrix(
    pts: Pts, params: DistanceParams = DistanceParams(), threads: int = 1
) -> DistanceMatrix:
    """Run the full iteration and return the final distance matrix."""
    report = pts_mod.validate(pts)
    if not report.ok:
        raise ValueError("invalid PTS: " + "; ".join(report.violations))
    d = np.zeros((pts.num_states, pts.num_states))
    for d in distance_iterates(pts, params, threads=threads):
        pass
    return DistanceMatrix(
        labels=pts.state_labels,
        values=d,
        discount=params.discount,
        accuracy=params.accuracy,
        iterations=params.iterations,
    )


def distance_between(
    pts: Pts,
    k: StateId,
    l: StateId,
    params: DistanceParams = DistanceParams(),
    threads: int = 1,
) -> float:
    """Distance entry (k, l); computes the full matrix since sweeps couple all pairs."""
    pts._check_state(k)
    pts._check_state(l)
    dm = distance_matrix(pts, params, threads=threads)
    return float(dm.values[k - 1, l - 1])


def to_json_dict(dm: DistanceMatrix) -> dict:
    return {
        "format_version": 1,
        "labels": list(dm.labels),
        "c": dm.discount,
        "alpha": dm.accuracy,
        "iterations": dm.iterations,
        "d": [[repr(float(v)) for v in row] for row in dm.values],
    }


def to_json(dm: DistanceMatrix) -> str:
    return json.dumps(to_json_dict(dm), indent=2)
