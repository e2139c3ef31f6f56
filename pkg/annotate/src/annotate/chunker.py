"""Shallow constituency over the rule tagger's output.

Greedy spans: NP (optional determiner/modifiers plus a nominal head run),
PP (preposition immediately followed by an NP), VP (verb cluster with
adverbs and infinitival to).  Anything else is lifted as a single-tag
constituent directly under S.  Brackets balance by construction.
"""

from __future__ import annotations

from annotate.tagger import END_TAG

CHUNKER_VERSION = "chunks-1.0.0"

_NOMINAL = {"NN", "NNS", "NNP", "PRP"}
_NP_LEAD = {"DT", "PRP$", "JJ", "CD"}
_NP_RESTART = {"DT", "PRP$", "PRP"}
_VERB = {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}
_VERBISH = _VERB | {"MD", "RB"}


def _leaf(surface: str, tag: str) -> str:
    return f"({tag} {surface})"


def _np_end(tags: list[str], i: int, n: int) -> int:
    """End of the NP starting at i, or i when there is none."""
    j = i
    seen = False
    while j < n:
        t = tags[j]
        if t in _NOMINAL:
            seen = True
            j += 1
            if j < n and tags[j] in _NP_RESTART:
                break
            continue
        if not seen and t in _NP_LEAD:
            j += 1
            continue
        break
    return j if seen else i


def _vp_end(tags: list[str], i: int, n: int) -> tuple[int, bool]:
    j = i
    seen = False
    while j < n:
        t = tags[j]
        if t in _VERB:
            seen = True
        elif t == "TO" and j + 1 < n and tags[j + 1] in _VERB:
            pass
        elif t not in _VERBISH:
            break
        j += 1
    return j, seen


def _np_node(tagged) -> str:
    return "(NP " + " ".join(_leaf(s, t) for s, t in tagged) + ")"


def chunk_sentence(tagged: list[tuple[str, str]]) -> str:
    """One balanced bracketed line rooted at S; the terminator becomes a
    '.'-labelled constituent."""
    tags = [t for _, t in tagged]
    n = len(tagged) - 1
    parts = []
    i = 0
    while i < n:
        j = _np_end(tags, i, n)
        if j > i:
            parts.append(_np_node(tagged[i:j]))
            i = j
            continue
        if tags[i] == "IN":
            j = _np_end(tags, i + 1, n)
            if j > i + 1:
                parts.append(
                    "(PP " + _leaf(*tagged[i]) + " " + _np_node(tagged[i + 1 : j]) + ")"
                )
                i = j
                continue
        j, any_verb = _vp_end(tags, i, n)
        if j > i and any_verb:
            parts.append("(VP " + " ".join(_leaf(s, t) for s, t in tagged[i:j]) + ")")
            i = j
            continue
        parts.append(_leaf(*tagged[i]))
        i += 1
    parts.append(_leaf(tagged[-1][0], END_TAG))
    return "(S " + " ".join(parts) + ")"
