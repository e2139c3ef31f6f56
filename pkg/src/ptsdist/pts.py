"""Probabilistic transition systems: data model, validation, queries, JSON I/O.

A system is a finite set of states 1..N with a subprobabilistic transition row
per state: outgoing probabilities may sum to less than 1, and the deficit (the
residual mass) is read as the probability of terminating / refusing to interact.
State index 0 is reserved for the virtual termination state; it is never stored
in a `Pts` and only appears in `extended_row` output and the transport layer.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

ROW_SUM_TOL = 1e-9
FORMAT_VERSION = 1

StateId = int  # 1-based; 0 is the reserved virtual termination state


class PtsFormatError(ValueError):
    """Raised when serialized PTS data is structurally malformed."""


class InvalidStateError(ValueError):
    """Raised when a state id is outside 1..N."""


@dataclass(frozen=True)
class Pts:
    """Immutable unlabelled PTS with subprobabilistic rows.

    `rows[i-1]` holds state i's outgoing transitions as (successor, probability)
    pairs sorted by successor id; absent successors have probability 0.
    """

    state_labels: tuple[str, ...]
    rows: tuple[tuple[tuple[StateId, float], ...], ...]

    @staticmethod
    def from_rows(
        labels: Iterable[str],
        rows: Iterable[Mapping[StateId, float] | Iterable[tuple[StateId, float]]],
    ) -> "Pts":
        """Build a Pts from per-state successor mappings (or pair iterables)."""
        label_tuple = tuple(str(x) for x in labels)
        if not label_tuple:
            raise ValueError("a system needs at least one state")
        canonical = []
        for row in rows:
            pairs = row.items() if isinstance(row, Mapping) else row
            canonical.append(tuple(sorted((int(j), float(p)) for j, p in pairs)))
        if len(canonical) != len(label_tuple):
            raise ValueError(
                f"{len(label_tuple)} labels but {len(canonical)} transition rows"
            )
        return Pts(label_tuple, tuple(canonical))

    @property
    def num_states(self) -> int:
        return len(self.state_labels)

    @property
    def state_ids(self) -> range:
        return range(1, len(self.state_labels) + 1)

    def successors(self, i: StateId) -> tuple[tuple[StateId, float], ...]:
        self._check_state(i)
        return self.rows[i - 1]

    def row_dict(self, i: StateId) -> dict[StateId, float]:
        return dict(self.successors(i))

    def probability(self, i: StateId, j: StateId) -> float:
        """Transition probability i -> j (0.0 if absent)."""
        self._check_state(j)
        for succ, p in self.successors(i):
            if succ == j:
                return p
        return 0.0

    def label(self, i: StateId) -> str:
        self._check_state(i)
        return self.state_labels[i - 1]

    def index_of(self, label: str) -> StateId:
        try:
            return self.state_labels.index(label) + 1
        except ValueError:
            raise InvalidStateError(f"no state labelled {label!r}") from None

    def _check_state(self, i: StateId) -> None:
        if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= len(self.state_labels):
            raise InvalidStateError(
                f"state id {i!r} not in 1..{len(self.state_labels)}"
            )


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...]


def validate(pts: Pts) -> ValidationReport:
    """Check the Pts invariants; violations are reported, never raised.

    Checks: at least one state, probabilities in [0,1], row sums at most
    1 + ROW_SUM_TOL, successor ids in range, pairwise-distinct labels.
    """
    violations: list[str] = []
    n = pts.num_states
    if n == 0:
        violations.append("system has no states")
    if len(set(pts.state_labels)) != n:
        seen: set[str] = set()
        for lab in pts.state_labels:
            if lab in seen:
                violations.append(f"duplicate state label {lab!r}")
            seen.add(lab)
    for i, row in enumerate(pts.rows, start=1):
        seen_succ: set[int] = set()
        for j, p in row:
            if not 1 <= j <= n:
                violations.append(f"state {i}: successor id {j} not in 1..{n}")
            if j in seen_succ:
                violations.append(f"state {i}: duplicate successor id {j}")
            seen_succ.add(j)
            if not 0.0 <= p <= 1.0:
                violations.append(f"state {i}: probability {p!r} outside [0, 1]")
        total = math.fsum(p for _, p in row)
        if total > 1.0 + ROW_SUM_TOL:
            violations.append(f"state {i}: row sum {total!r} > 1")
    return ValidationReport(ok=not violations, violations=tuple(violations))


def residual(pts: Pts, i: StateId) -> float:
    """Termination mass of state i: 1 minus the row sum, clamped to [0, 1]."""
    total = math.fsum(p for _, p in pts.successors(i))
    return min(1.0, max(0.0, 1.0 - total))


def extended_row(pts: Pts, i: StateId) -> list[float]:
    """State i's distribution over {0, 1, ..., N}: residual first, then the row."""
    out = [0.0] * (pts.num_states + 1)
    out[0] = residual(pts, i)
    for j, p in pts.successors(i):
        out[j] = p
    return out


def to_json_dict(pts: Pts) -> dict:
    """Encode with decimal-string probabilities so golden files stay portable."""
    return {
        "format_version": FORMAT_VERSION,
        "labels": list(pts.state_labels),
        "rows": [[[j, repr(p)] for j, p in row] for row in pts.rows],
    }


def to_json(pts: Pts) -> str:
    return json.dumps(to_json_dict(pts), indent=2)


def from_json_dict(data: object) -> Pts:
    if not isinstance(data, dict):
        raise PtsFormatError("top-level value must be an object")
    if data.get("format_version") != FORMAT_VERSION:
        raise PtsFormatError(
            f"missing or unsupported format_version (expected {FORMAT_VERSION})"
        )
    labels = data.get("labels")
    rows = data.get("rows")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise PtsFormatError('"labels" must be a list of strings')
    if not isinstance(rows, list) or len(rows) != len(labels):
        raise PtsFormatError('"rows" must be a list with one entry per label')
    parsed_rows = []
    for i, row in enumerate(rows, start=1):
        if not isinstance(row, list):
            raise PtsFormatError(f"row {i} must be a list of [successor, probability] pairs")
        pairs = []
        for entry in row:
            if not (isinstance(entry, list) and len(entry) == 2):
                raise PtsFormatError(f"row {i}: entries must be [successor, probability] pairs")
            j, p = entry
            if not isinstance(j, int) or isinstance(j, bool):
                raise PtsFormatError(f"row {i}: successor index {j!r} is not an integer")
            if not isinstance(p, str):
                raise PtsFormatError(f"row {i}: probability {p!r} is not a decimal string")
            try:
                value = float(p)
            except ValueError:
                raise PtsFormatError(f"row {i}: cannot parse probability {p!r}") from None
            pairs.append((j, value))
        parsed_rows.append(pairs)
    return Pts.from_rows(labels, parsed_rows)


def from_json(text: str) -> Pts:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PtsFormatError(f"invalid JSON: {e}") from None
    return from_json_dict(data)


def load(path: str) -> Pts:
    with open(path, encoding="utf-8") as f:
        return from_json(f.read())


def save(pts: Pts, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_json(pts))
        f.write("\n")
