"""Builders turning text into probabilistic transition systems.

Three unit streams are supported: letters of raw text, POS tags of
pre-tagged sentences, and constituent labels of parse trees.  Every built
system has a dedicated start state, an absorbing end state, and transition
probabilities that are relative bigram frequencies within sentences (or
parent-child frequencies within trees).  `combine` glues two built systems
into one that shares only the end state, which is what the distance between
two texts is computed on.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field

from ptsdist.pts import Pts, StateId

START_LABEL = "start"
END_LABEL = "end"
END_TAG = "."
DEFAULT_TERMINATORS = ".!?"


class TextFormatError(ValueError):
    """Malformed text input (bad TSV line, unbalanced tree, empty input)."""


@dataclass(frozen=True)
class TaggedSentence:
    """Tokens as (surface, tag) pairs; last token is the end marker, tag ".".

    Exactly one end marker is allowed and it must be final.
    """

    tokens: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        if not self.tokens:
            raise TextFormatError("sentence has no tokens")
        if self.tokens[-1][1] != END_TAG:
            raise TextFormatError(
                f"sentence does not finish with an end token: {self.tokens[-1]!r}"
            )
        for surface, tag in self.tokens[:-1]:
            if tag == END_TAG:
                raise TextFormatError(
                    f"end token {surface!r} before the end of the sentence"
                )

    @property
    def tags(self) -> tuple[str, ...]:
        """Tags without the final end marker."""
        return tuple(tag for _, tag in self.tokens[:-1])


@dataclass(frozen=True)
class ParseTree:
    """Constituent node; children are sub-trees or lexical leaves (strings)."""

    label: str
    children: tuple = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.label:
            raise TextFormatError("constituent with empty label")
        if not self.children:
            raise TextFormatError(f"constituent {self.label!r} has no children")


@dataclass(frozen=True)
class BuiltPts:
    """A feature system with its designated start and end states."""

    pts: Pts
    start: StateId
    end: StateId


@dataclass(frozen=True)
class CombinedPts:
    """Two feature systems sharing one end state; distances are taken
    between the two start states."""

    pts: Pts
    start_a: StateId
    start_b: StateId
    end: StateId


def parse_tagged_tsv(text: str) -> list[TaggedSentence]:
    """Parse surface<TAB>tag lines, blank lines separating sentences."""
    sentences: list[TaggedSentence] = []
    tokens: list[tuple[str, str]] = []
    start_line = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            if tokens:
                sentences.append(_finish_sentence(tokens, start_line, lineno - 1))
                tokens = []
                start_line = None
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise TextFormatError(
                f"line {lineno}: expected 'surface<TAB>tag', got {line!r}"
            )
        if start_line is None:
            start_line = lineno
        tokens.append((parts[0], parts[1]))
        lastno = lineno
    if tokens:
        sentences.append(_finish_sentence(tokens, start_line, lastno))
    if not sentences:
        raise TextFormatError("empty input: no tagged sentences found")
    return sentences


def _finish_sentence(tokens, start_line, end_line) -> TaggedSentence:
    try:
        return TaggedSentence(tuple(tokens))
    except TextFormatError as exc:
        raise TextFormatError(f"lines {start_line}-{end_line}: {exc}") from exc


_TREE_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_trees(text: str) -> list[ParseTree]:
    """Parse bracketed constituency trees, one per non-blank line."""
    trees = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            trees.append(_parse_tree_line(line, lineno))
    return trees


def _parse_tree_line(line: str, lineno: int) -> ParseTree:
    tokens = _TREE_TOKEN.findall(line)
    pos = 0

    def fail(msg: str):
        raise TextFormatError(f"line {lineno}: {msg}")

    def node() -> ParseTree:
        nonlocal pos
        if pos >= len(tokens) or tokens[pos] != "(":
            fail(f"expected '(' at token {pos + 1}")
        pos += 1
        if pos >= len(tokens) or tokens[pos] in "()":
            fail("expected a constituent label after '('")
        label = tokens[pos]
        pos += 1
        children: list = []
        while pos < len(tokens) and tokens[pos] != ")":
            if tokens[pos] == "(":
                children.append(node())
            else:
                children.append(tokens[pos])
                pos += 1
        if pos >= len(tokens):
            fail(f"unbalanced brackets: constituent {label!r} is never closed")
        pos += 1  # consume ')'
        try:
            return ParseTree(label, tuple(children))
        except TextFormatError as exc:
            fail(str(exc))

    tree = node()
    if pos != len(tokens):
        fail(f"trailing content after the root constituent: {tokens[pos]!r}")
    return tree


def split_sentences(text: str, terminators: str = DEFAULT_TERMINATORS) -> list[list[str]]:
    """Lower-cased letter sequences of each terminated sentence.

    Non-letter characters are dropped, a terminator closes the current
    sentence, and trailing unterminated material is discarded.
    """
    if not text.strip():
        raise TextFormatError("empty input: no text to read")
    sentences: list[list[str]] = []
    letters: list[str] = []
    saw_terminator = False
    for ch in text:
        if ch in terminators:
            saw_terminator = True
            if letters:
                sentences.append(letters)
                letters = []
        elif ch.isalpha():
            letters.append(ch.lower())
    if not saw_terminator:
        raise TextFormatError(
            f"no sentence terminator found (expected one of {terminators!r})"
        )
    if not sentences:
        raise TextFormatError("no complete sentences found")
    return sentences


def _chain_pts(sequences: list[list[str]]) -> BuiltPts:
    """PTS of within-sequence bigram frequencies with start/end bookkeeping.

    States are start, the distinct units sorted, then end.  Each sequence
    contributes start->first, unit bigrams, and last->end counts; an empty
    sequence contributes start->end.  Rows are normalised per state.
    """
    units = sorted({u for seq in sequences for u in seq})
    for reserved in (START_LABEL, END_LABEL):
        if reserved in units:
            raise TextFormatError(
                f"unit {reserved!r} collides with a reserved state label"
            )
    labels = [START_LABEL, *units, END_LABEL]
    index = {label: i for i, label in enumerate(labels, start=1)}
    start, end = index[START_LABEL], index[END_LABEL]
    counts: dict[StateId, Counter] = {i: Counter() for i in index.values()}
    for seq in sequences:
        if not seq:
            counts[start][end] += 1
            continue
        counts[start][index[seq[0]]] += 1
        for a, b in zip(seq, seq[1:]):
            counts[index[a]][index[b]] += 1
        counts[index[seq[-1]]][end] += 1
    rows = []
    for i in sorted(counts):
        c = counts[i]
        total = sum(c.values())
        rows.append({j: k / total for j, k in sorted(c.items())} if total else {})
    return BuiltPts(pts=Pts.from_rows(labels, rows), start=start, end=end)


def build_letter_pts(text: str, terminators: str = DEFAULT_TERMINATORS) -> BuiltPts:
    """Letter-bigram system of raw text."""
    return _chain_pts(split_sentences(text, terminators))


def build_pos_pts(sentences: list[TaggedSentence]) -> BuiltPts:
    """Tag-bigram system of tagged sentences (end markers excluded)."""
    if not sentences:
        raise TextFormatError("empty input: no tagged sentences")
    return _chain_pts([list(s.tags) for s in sentences])


def build_grammar_pts(trees: list[ParseTree]) -> BuiltPts:
    """Parent-child system of constituent labels.

    The root of every tree is identified with the start state; lexical
    leaves are identified with the end state.  Every parent-child edge
    contributes one count to the parent label's row.
    """
    if not trees:
        raise TextFormatError("empty input: no parse trees")
    units: set[str] = set()

    def collect(node: ParseTree, is_root: bool) -> None:
        if not is_root:
            units.add(node.label)
        for child in node.children:
            if isinstance(child, ParseTree):
                collect(child, False)

    for tree in trees:
        collect(tree, True)
    ordered = sorted(units)
    for reserved in (START_LABEL, END_LABEL):
        if reserved in ordered:
            raise TextFormatError(
                f"constituent label {reserved!r} collides with a reserved state label"
            )
    labels = [START_LABEL, *ordered, END_LABEL]
    index = {label: i for i, label in enumerate(labels, start=1)}
    start, end = index[START_LABEL], index[END_LABEL]
    counts: dict[StateId, Counter] = {i: Counter() for i in index.values()}

    def record(node: ParseTree, source: StateId) -> None:
        for child in node.children:
            if isinstance(child, ParseTree):
                counts[source][index[child.label]] += 1
                record(child, index[child.label])
            else:
                counts[source][end] += 1

    for tree in trees:
        record(tree, start)
    rows = []
    for i in sorted(counts):
        c = counts[i]
        total = sum(c.values())
        rows.append({j: k / total for j, k in sorted(c.items())} if total else {})
    return BuiltPts(pts=Pts.from_rows(labels, rows), start=start, end=end)


def combine(a: BuiltPts, b: BuiltPts) -> CombinedPts:
    """Disjoint union of two built systems sharing only the end state.

    Labels are prefixed "A:" and "B:"; the shared end state is labelled
    "end" and comes last.  Both end states must be absorbing.
    """
    for name, built in (("first", a), ("second", b)):
        if dict(built.pts.successors(built.end)):
            raise ValueError(f"{name} system's end state is not absorbing")
    a_ids = [s for s in a.pts.state_ids if s != a.end]
    b_ids = [s for s in b.pts.state_ids if s != b.end]
    end = len(a_ids) + len(b_ids) + 1
    remap_a = {s: i for i, s in enumerate(a_ids, start=1)}
    remap_a[a.end] = end
    remap_b = {s: i for i, s in enumerate(b_ids, start=len(a_ids) + 1)}
    remap_b[b.end] = end
    labels = (
        ["A:" + a.pts.label(s) for s in a_ids]
        + ["B:" + b.pts.label(s) for s in b_ids]
        + [END_LABEL]
    )
    rows: list[dict[StateId, float]] = []
    for s in a_ids:
        rows.append({remap_a[j]: p for j, p in a.pts.successors(s)})
    for s in b_ids:
        rows.append({remap_b[j]: p for j, p in b.pts.successors(s)})
    rows.append({})
    return CombinedPts(
        pts=Pts.from_rows(labels, rows),
        start_a=remap_a[a.start],
        start_b=remap_b[b.start],
        end=end,
    )
