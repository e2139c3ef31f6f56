"""Multi-feature text comparison.

For each requested feature the text under test and each category text are
turned into feature systems, combined end-to-end, and the behavioural
distance between the two start states is taken.  Per-category feature
distances aggregate into a Euclidean norm; categories rank by ascending
aggregate with lexicographic tie-breaks.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field

from ptsdist.distance import DistanceParams, distance_between
from ptsdist.features import (
    DEFAULT_TERMINATORS,
    build_grammar_pts,
    build_letter_pts,
    build_pos_pts,
    combine,
    parse_tagged_tsv,
    parse_trees,
)

FEATURES = ("letters", "pos", "grammar")


class FeatureUnavailableError(ValueError):
    """The requested feature needs an input kind that was not provided."""


@dataclass(frozen=True)
class TextInputs:
    """The up-to-three representations of one text.

    Raw text feeds the letters feature, tagged TSV the pos feature, and
    bracketed trees the grammar feature.
    """

    raw_text: str | None = None
    tagged_tsv: str | None = None
    trees_text: str | None = None

    def available_features(self) -> tuple[str, ...]:
        present = {
            "letters": self.raw_text,
            "pos": self.tagged_tsv,
            "grammar": self.trees_text,
        }
        return tuple(f for f in FEATURES if present[f] is not None)

    def digest(self) -> str:
        """sha256 over the present input kinds, keyed to stay order-stable."""
        h = hashlib.sha256()
        for kind, payload in (
            ("letters", self.raw_text),
            ("pos", self.tagged_tsv),
            ("grammar", self.trees_text),
        ):
            if payload is not None:
                h.update(kind.encode())
                h.update(b"\x00")
                h.update(payload.encode("utf-8"))
                h.update(b"\x00")
        return h.hexdigest()


def build_feature(
    inputs: TextInputs, feature: str, terminators: str = DEFAULT_TERMINATORS
):
    if feature == "letters":
        if inputs.raw_text is None:
            raise FeatureUnavailableError("letters feature needs raw text input")
        return build_letter_pts(inputs.raw_text, terminators)
    if feature == "pos":
        if inputs.tagged_tsv is None:
            raise FeatureUnavailableError("pos feature needs tagged TSV input")
        return build_pos_pts(parse_tagged_tsv(inputs.tagged_tsv))
    if feature == "grammar":
        if inputs.trees_text is None:
            raise FeatureUnavailableError("grammar feature needs parse tree input")
        return build_grammar_pts(parse_trees(inputs.trees_text))
    raise ValueError(f"unknown feature {feature!r} (known: {', '.join(FEATURES)})")


def feature_distance(
    a: TextInputs,
    b: TextInputs,
    feature: str,
    params: DistanceParams = DistanceParams(),
    terminators: str = DEFAULT_TERMINATORS,
    threads: int = 1,
) -> float:
    """Behavioural distance between two texts under one feature."""
    combined = combine(
        build_feature(a, feature, terminators), build_feature(b, feature, terminators)
    )
    return distance_between(
        combined.pts, combined.start_a, combined.start_b, params, threads=threads
    )


@dataclass(frozen=True)
class ClassificationReport:
    features: tuple[str, ...]
    categories: tuple[str, ...]
    distances: dict = field(default_factory=dict)  # category -> feature -> float
    aggregates: dict = field(default_factory=dict)  # category -> float
    ranking: tuple[str, ...] = ()
    discount: float = 0.9
    accuracy: float = 0.01
    digests: dict = field(default_factory=dict)  # "text" and each category

    @property
    def best(self) -> str:
        return self.ranking[0]


def classify(
    text: TextInputs,
    categories: dict[str, TextInputs],
    features: tuple[str, ...] = FEATURES,
    params: DistanceParams = DistanceParams(),
    terminators: str = DEFAULT_TERMINATORS,
    threads: int = 1,
) -> ClassificationReport:
    if not categories:
        raise ValueError("at least one category is required")
    if not features:
        raise ValueError("at least one feature is required")
    for f in features:
        if f not in FEATURES:
            raise ValueError(f"unknown feature {f!r} (known: {', '.join(FEATURES)})")
    names = tuple(sorted(categories))
    distances: dict[str, dict[str, float]] = {}
    for name in names:
        per_feature = {}
        for f in features:
            try:
                per_feature[f] = feature_distance(
                    text, categories[name], f, params, terminators, threads=threads
                )
            except ValueError as exc:
                raise ValueError(
                    f"category {name!r}, feature {f!r}: {exc}"
                ) from exc
        distances[name] = per_feature
    aggregates = {
        name: math.sqrt(math.fsum(v * v for v in distances[name].values()))
        for name in names
    }
    ranking = tuple(sorted(names, key=lambda n: (aggregates[n], n)))
    digests = {"text": text.digest()}
    digests.update({name: categories[name].digest() for name in names})
    return ClassificationReport(
        features=tuple(features),
        categories=names,
        distances=distances,
        aggregates=aggregates,
        ranking=ranking,
        discount=params.discount,
        accuracy=params.accuracy,
        digests=digests,
    )


def to_json_dict(report: ClassificationReport) -> dict:
    return {
        "format_version": 1,
        "features": list(report.features),
        "categories": list(report.categories),
        "c": report.discount,
        "alpha": report.accuracy,
        "distances": {
            name: {f: repr(v) for f, v in per.items()}
            for name, per in report.distances.items()
        },
        "euclid": {name: repr(v) for name, v in report.aggregates.items()},
        "ranking": list(report.ranking),
        "digests": dict(report.digests),
    }


def to_json(report: ClassificationReport) -> str:
    return json.dumps(to_json_dict(report), indent=2)


def render_table(report: ClassificationReport) -> str:
    """Aligned table: one row per feature plus the aggregate, one column
    per category, entries to four decimal places."""
    row_names = [*report.features, "Euclid"]
    stub = max(len(r) for r in row_names)
    cols = []
    for name in report.categories:
        cells = [f"{report.distances[name][f]:.4f}" for f in report.features]
        cells.append(f"{report.aggregates[name]:.4f}")
        cols.append((name, cells, max(len(name), 6)))
    lines = [
        " ".join(
            [" " * stub] + [name.rjust(width) for name, _, width in cols]
        ).rstrip()
    ]
    for i, row in enumerate(row_names):
        lines.append(
            " ".join(
                [row.ljust(stub)] + [cells[i].rjust(width) for _, cells, width in cols]
            ).rstrip()
        )
    return "\n".join(lines) + "\n"
