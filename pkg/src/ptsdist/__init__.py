"""Behavioural distances on probabilistic transition systems built from text features.

The toolkit embeds syntactic features of texts (letter bigrams, POS bigrams,
constituent hierarchies) into finite probabilistic transition systems, computes
approximated behavioural pseudometric distances between states by an iterated
transportation-problem algorithm, and ranks genre categories by per-feature
distance vectors.
"""

from ptsdist.pts import Pts, validate, residual, extended_row
from ptsdist.distance import DistanceParams, DistanceMatrix, distance_matrix, distance_between
from ptsdist.bisim import Partition, coarsest_bisimulation, are_bisimilar
from ptsdist.features import (
    TaggedSentence,
    ParseTree,
    BuiltPts,
    CombinedPts,
    build_letter_pts,
    build_pos_pts,
    build_grammar_pts,
    combine,
)
from ptsdist.classify import ClassificationReport, feature_distance, classify

__version__ = "0.1.0"

__all__ = [
    "Pts",
    "validate",
    "residual",
    "extended_row",
    "DistanceParams",
    "DistanceMatrix",
    "distance_matrix",
    "distance_between",
    "Partition",
    "coarsest_bisimulation",
    "are_bisimilar",
    "TaggedSentence",
    "ParseTree",
    "BuiltPts",
    "CombinedPts",
    "build_letter_pts",
    "build_pos_pts",
    "build_grammar_pts",
    "combine",
    "ClassificationReport",
    "feature_distance",
    "classify",
]
