"""Shared helpers: seeded random PTS construction used across the suite."""

from __future__ import annotations

import numpy as np

from ptsdist.pts import Pts


def make_random_pts(rng: np.random.Generator, max_states: int = 8) -> Pts:
    """Random PTS with mixed row styles: full, subprobability, and empty.

    Sizes are uniform on 1..max_states and supports are random subsets, so
    small, sparse and dense systems all show up.
    """
    n = int(rng.integers(1, max_states + 1))
    rows = []
    for _ in range(n):
        style = rng.random()
        if style < 0.2:
            rows.append({})
            continue
        size = int(rng.integers(1, n + 1))
        support = rng.choice(n, size=size, replace=False)
        weights = rng.dirichlet(np.ones(size))
        scale = 1.0 if style < 0.55 else float(rng.uniform(0.05, 1.0))
        rows.append(
            {int(j) + 1: float(w * scale) for j, w in zip(support, weights)}
        )
    labels = [f"s{i}" for i in range(1, n + 1)]
    return Pts.from_rows(labels, rows)


def with_duplicate_state(pts: Pts, s: int) -> tuple[Pts, int]:
    """Append a fresh state with a copy of state s's outgoing row."""
    n = pts.num_states
    labels = [*pts.state_labels, f"{pts.label(s)}+copy"]
    rows = [dict(pts.successors(i)) for i in pts.state_ids]
    rows.append(dict(pts.successors(s)))
    return Pts.from_rows(labels, rows), n + 1
