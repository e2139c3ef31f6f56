"""Minimum-cost transportation solver for coupling two successor distributions.

Each comparison of two states reduces to a transportation problem over the
extended index set {0, 1, ..., N} (0 is the virtual termination state): supply
is one state's extended row, demand the other's, and the cost matrix prices
shipping probability mass between successor states.  `solve` runs successive
shortest augmenting paths with node potentials on the dense bipartite network;
`reference_solve` is a deliberately naive LP formulation used only to
cross-check `solve`.

The path search is a linear-scan Dijkstra: the networks here have at most a
few dozen nodes, where scanning beats a heap, and the whole kernel stays in
plain array code that numba can compile.  Without numba the same function
runs under CPython, just slower.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def _njit(**_kwargs):
        def deco(fn):
            return fn

        return deco


FEAS_TOL = 1e-9
MASS_EPS = 1e-12  # marginal mass below this is dropped before network construction
FLOW_EPS = 1e-15  # residual flow below this counts as saturated

_INF = 1e30


class InfeasibleTransportError(ValueError):
    """Supply and demand totals disagree (malformed instance, never rebalanced)."""


@dataclass(frozen=True)
class TransportInstance:
    """Marginals and costs over {0, ..., N}; both marginals must share a total."""

    supply: Sequence[float]
    demand: Sequence[float]
    cost: Sequence[Sequence[float]]


@dataclass(frozen=True)
class TransportSolution:
    objective: float
    flow: np.ndarray  # flow[i][j] = mass shipped from source i to sink j


def _check_instance(supply, demand, cost) -> None:
    k = len(supply)
    if len(demand) != k:
        raise ValueError(f"supply has {k} entries but demand has {len(demand)}")
    if len(cost) != k or any(len(row) != k for row in cost):
        raise ValueError(f"cost matrix must be {k}x{k}")
    for name, vec in (("supply", supply), ("demand", demand)):
        for v in vec:
            if not v >= 0.0:  # also catches NaN
                raise ValueError(f"{name} entry {v!r} is negative or not a number")
    total_s = float(np.sum(supply))
    total_d = float(np.sum(demand))
    if abs(total_s - total_d) > FEAS_TOL:
        raise InfeasibleTransportError(
            f"supply total {total_s!r} and demand total {total_d!r} disagree"
        )


@_njit(cache=True)
def _ssp_kernel(a, b, cost):
    """Successive shortest paths with potentials on the dense bipartite net.

    a: (m,) positive supplies; b: (n,) positive demands; cost: (m, n).
    Returns (flow matrix, unshipped supply).  Equal-distance ties settle the
    lowest-index node, sources before sinks, so the flow is deterministic.
    """
    m = a.shape[0]
    n = b.shape[0]
    rem_a = a.copy()
    rem_b = b.copy()
    flow = np.zeros((m, n))
    pot_s = np.zeros(m)
    pot_t = np.zeros(n)
    ds = np.empty(m)
    dt = np.empty(n)
    vis_s = np.empty(m, np.bool_)
    vis_t = np.empty(n, np.bool_)
    par_t = np.empty(n, np.int64)  # sink j reached by forward arc from source
    par_s = np.empty(m, np.int64)  # source i reached by reverse arc from sink
    left = 0.0
    for i in range(m):
        left += rem_a[i]
    rounds = 0
    max_rounds = (m + 1) * (n + 1) + 8 * (m + n) + 64
    while left > MASS_EPS:
        rounds += 1
        if rounds > max_rounds:
            break
        for i in range(m):
            ds[i] = 0.0 if rem_a[i] > 0.0 else _INF
            vis_s[i] = False
            par_s[i] = -1
        for j in range(n):
            dt[j] = _INF
            vis_t[j] = False
            par_t[j] = -1
        goal = -1
        while True:
            best = _INF
            node = -1
            on_sink = False
            for i in range(m):
                if not vis_s[i] and ds[i] < best:
                    best = ds[i]
                    node = i
                    on_sink = False
            for j in range(n):
                if not vis_t[j] and dt[j] < best:
                    best = dt[j]
                    node = j
                    on_sink = True
            if node < 0:
                break
            if on_sink:
                vis_t[node] = True
                if rem_b[node] > 0.0:
                    goal = node
                    break
                base = best + pot_t[node]
                for i in range(m):
                    if not vis_s[i] and flow[i, node] > 0.0:
                        nd = base - cost[i, node] - pot_s[i]
                        if nd < ds[i]:
                            ds[i] = nd
                            par_s[i] = node
            else:
                vis_s[node] = True
                base = best + pot_s[node]
                for j in range(n):
                    if not vis_t[j]:
                        nd = base + cost[node, j] - pot_t[j]
                        if nd < dt[j]:
                            dt[j] = nd
                            par_t[j] = node
        if goal < 0:
            break
        reach = dt[goal]
        for i in range(m):
            pot_s[i] += ds[i] if ds[i] < reach else reach
        for j in range(n):
            pot_t[j] += dt[j] if dt[j] < reach else reach

        push = rem_b[goal]
        j = goal
        while True:
            i = par_t[j]
            if par_s[i] < 0:
                if rem_a[i] < push:
                    push = rem_a[i]
                break
            j = par_s[i]
            if flow[i, j] < push:
                push = flow[i, j]
        j = goal
        while True:
            i = par_t[j]
            flow[i, j] += push
            if par_s[i] < 0:
                rem_a[i] -= push
                if rem_a[i] < FLOW_EPS:
                    rem_a[i] = 0.0
                break
            nxt = par_s[i]
            flow[i, nxt] -= push
            if flow[i, nxt] < FLOW_EPS:
                flow[i, nxt] = 0.0
            j = nxt
        rem_b[goal] -= push
        if rem_b[goal] < FLOW_EPS:
            rem_b[goal] = 0.0
        left -= push
    return flow, left


def _compact(supply, demand, cost):
    sup = np.asarray(supply, dtype=float)
    dem = np.asarray(demand, dtype=float)
    cst = np.asarray(cost, dtype=float)
    si = np.nonzero(sup > MASS_EPS)[0]
    dj = np.nonzero(dem > MASS_EPS)[0]
    return sup, dem, cst, si, dj


def solve_objective(supply, demand, cost) -> float:
    """Optimal transport cost only, skipping validation and flow assembly.

    Hot path for the distance iteration; the caller guarantees that both
    marginals are extended probability rows (equal totals).
    """
    sup, dem, cst, si, dj = _compact(supply, demand, cost)
    if si.size == 0 or dj.size == 0:
        return 0.0
    sub = np.ascontiguousarray(cst[si][:, dj])
    flow, left = _ssp_kernel(sup[si], dem[dj], sub)
    if left > FEAS_TOL:
        raise RuntimeError(f"transport solver left {left!r} mass unshipped")
    return float(np.sum(sub * flow))


def solve(instance: TransportInstance) -> TransportSolution:
    """Minimum-cost flow solution of the transportation instance.

    The objective is the unique LP optimum; the flow is one optimal transport
    plan, deterministic for a given instance.
    """
    supply, demand, cost = instance.supply, instance.demand, instance.cost
    _check_instance(supply, demand, cost)
    sup, dem, cst, si, dj = _compact(supply, demand, cost)
    k = len(sup)
    full = np.zeros((k, k))
    if si.size == 0 or dj.size == 0:
        return TransportSolution(objective=0.0, flow=full)
    sub = np.ascontiguousarray(cst[si][:, dj])
    flow, left = _ssp_kernel(sup[si], dem[dj], sub)
    if left > FEAS_TOL:
        raise RuntimeError(f"transport solver left {left!r} mass unshipped")
    for a, i in enumerate(si):
        full[i, dj] = flow[a]
    return TransportSolution(objective=float(np.sum(sub * flow)), flow=full)


def reference_solve(instance: TransportInstance) -> TransportSolution:
    """Same contract as `solve`, via a plain equality-constrained LP.

    Obviously-correct textbook formulation (one variable per cell, one
    constraint per marginal), intended for small instances in tests.
    """
    supply, demand, cost = instance.supply, instance.demand, instance.cost
    _check_instance(supply, demand, cost)
    k = len(supply)
    c = np.asarray(cost, dtype=float).ravel()
    a_eq = np.zeros((2 * k, k * k))
    for i in range(k):
        a_eq[i, i * k : (i + 1) * k] = 1.0
    for j in range(k):
        a_eq[k + j, j::k] = 1.0
    b_eq = np.concatenate([np.asarray(supply, float), np.asarray(demand, float)])
    res = linprog(c, A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
    if not res.success:
        raise InfeasibleTransportError(f"LP reported no optimum: {res.message}")
    return TransportSolution(objective=float(res.fun), flow=res.x.reshape(k, k))
