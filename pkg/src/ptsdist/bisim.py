"""Probabilistic bisimulation by partition refinement.

Two states are bisimilar when they assign equal probability to every block of
the coarsest bisimulation partition, the virtual termination state's residual
mass included.  Refinement starts from the single all-states block and splits
blocks by signature until stable; probabilities are compared with a fixed
tolerance, never hashed.
"""

from __future__ import annotations

from dataclasses import dataclass

from ptsdist.pts import Pts, StateId, residual

PROB_TOL = 1e-9


@dataclass(frozen=True)
class Partition:
    """Blocks of state ids (each sorted, blocks ordered by smallest member)."""

    blocks: tuple[tuple[StateId, ...], ...]
    block_index: tuple[int, ...]  # entry i-1 is the block number of state i

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_of(self, state: StateId) -> int:
        return self.block_index[state - 1]

    def same_block(self, s: StateId, t: StateId) -> bool:
        return self.block_index[s - 1] == self.block_index[t - 1]


def _signature(pts: Pts, state: StateId, block_of: list[int], num_blocks: int, res):
    # Slot 0 is the termination state's own block; blocks shift up by one.
    sig = [0.0] * (num_blocks + 1)
    sig[0] = res[state]
    for j, p in pts.successors(state):
        sig[block_of[j]] += p
    return sig


def _sig_close(a: list[float], b: list[float]) -> bool:
    return all(abs(x - y) <= PROB_TOL for x, y in zip(a, b))


def coarsest_bisimulation(pts: Pts) -> Partition:
    """Coarsest partition whose blocks are closed under mutual simulation."""
    n = pts.num_states
    res = {s: residual(pts, s) for s in pts.state_ids}
    blocks: list[list[StateId]] = [list(pts.state_ids)]
    # block_of maps state id -> 1-based block slot (0 stays the virtual state).
    block_of = [0] * (n + 1)
    for s in pts.state_ids:
        block_of[s] = 1
    while True:
        sigs = {
            s: _signature(pts, s, block_of, len(blocks), res) for s in pts.state_ids
        }
        new_blocks: list[list[StateId]] = []
        for block in blocks:
            groups: list[tuple[list[float], list[StateId]]] = []
            for s in block:
                for sig, members in groups:
                    if _sig_close(sig, sigs[s]):
                        members.append(s)
                        break
                else:
                    groups.append((sigs[s], [s]))
            new_blocks.extend(members for _, members in groups)
        if len(new_blocks) == len(blocks):
            break
        blocks = new_blocks
        for num, block in enumerate(blocks, start=1):
            for s in block:
                block_of[s] = num
    blocks.sort(key=lambda b: b[0])
    index = [0] * n
    for num, block in enumerate(blocks):
        for s in block:
            index[s - 1] = num
    return Partition(
        blocks=tuple(tuple(b) for b in blocks), block_index=tuple(index)
    )


def are_bisimilar(pts: Pts, s: StateId, t: StateId) -> bool:
    pts._check_state(s)
    pts._check_state(t)
    if s == t:
        return True
    return coarsest_bisimulation(pts).same_block(s, t)
