"""Deterministic corpus annotation: rule-tagged TSV and shallow trees."""

from annotate.chunker import CHUNKER_VERSION, chunk_sentence
from annotate.corpora import SUPPORTED, fetch_corpus
from annotate.pipeline import (
    MANIFEST_NAME,
    CorpusJob,
    annotate_pos,
    annotate_trees,
    run_job,
)
from annotate.tagger import TAGGER_VERSION, tag_text

__version__ = "0.1.0"

__all__ = [
    "CHUNKER_VERSION",
    "CorpusJob",
    "MANIFEST_NAME",
    "SUPPORTED",
    "TAGGER_VERSION",
    "annotate_pos",
    "annotate_trees",
    "chunk_sentence",
    "fetch_corpus",
    "run_job",
    "tag_text",
]
