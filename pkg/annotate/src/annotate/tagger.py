"""Deterministic rule tagger.

No trained model: a closed-class lexicon plus ordered suffix and context
rules.  The contract is determinism under a pinned TAGGER_VERSION, so that
emitted corpora are attributable; tagging quality is explicitly a non-goal.
"""

from __future__ import annotations

import re
import warnings

TAGGER_VERSION = "rules-1.0.0"

END_TAG = "."

_WORD = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)*|\d+(?:[.,]\d+)*|[,;:]")

_PUNCT_TAGS = {",": ",", ";": ":", ":": ":"}

_LEXICON: dict[str, str] = {}
for _w in "the a an this that these those some any no every each either neither".split():
    _LEXICON[_w] = "DT"
for _w in "i you he she it we they me him her us them".split():
    _LEXICON[_w] = "PRP"
for _w in "my your its our their".split():
    _LEXICON[_w] = "PRP$"
for _w in (
    "of in on at by for with from into over under about after before "
    "between during against through upon within without above below near "
    "since until toward towards"
).split():
    _LEXICON[_w] = "IN"
for _w in "and or but nor yet".split():
    _LEXICON[_w] = "CC"
for _w in "can could will would shall should may might must".split():
    _LEXICON[_w] = "MD"
_LEXICON.update(
    {
        "to": "TO",
        "not": "RB", "never": "RB", "also": "RB", "very": "RB", "so": "RB",
        "there": "EX",
        "is": "VBZ", "has": "VBZ", "does": "VBZ",
        "are": "VBP", "am": "VBP", "have": "VBP", "do": "VBP",
        "was": "VBD", "were": "VBD", "had": "VBD", "did": "VBD",
        "be": "VB", "been": "VBN", "being": "VBG",
        "who": "WP", "whom": "WP", "whose": "WP$",
        "which": "WDT", "what": "WDT",
        "when": "WRB", "where": "WRB", "why": "WRB", "how": "WRB",
    }
)


def _sentence_chunks(text: str) -> list[tuple[str, str]]:
    """(body, terminator) pairs; runs like '...' count once and trailing
    unterminated material is dropped."""
    chunks = []
    start = 0
    i = 0
    while i < len(text):
        if (
            text[i] == "."
            and 0 < i < len(text) - 1
            and text[i - 1].isdigit()
            and text[i + 1].isdigit()
        ):
            # decimal point, not a terminator
            i += 1
            continue
        if text[i] in ".!?":
            body = text[start:i]
            term = text[i]
            while i + 1 < len(text) and text[i + 1] in ".!?":
                i += 1
            chunks.append((body, term))
            start = i + 1
        i += 1
    return chunks


def _suffix_tag(low: str) -> str:
    if low.endswith("ing") and len(low) > 4:
        return "VBG"
    if low.endswith("ed") and len(low) > 3:
        return "VBD"
    if low.endswith("ly") and len(low) > 3:
        return "RB"
    for suf in ("tion", "sion", "ment", "ness", "ity", "ism"):
        if low.endswith(suf) and len(low) > len(suf) + 1:
            return "NN"
    for suf in ("ous", "ful", "ive", "able", "ible", "ish", "al", "ic"):
        if low.endswith(suf) and len(low) > len(suf) + 1:
            return "JJ"
    if low.endswith("s") and not low.endswith(("ss", "us", "is")) and len(low) > 3:
        return "NNS"
    return "NN"


def _tag_word(surface: str, idx: int, prev_tag: str) -> str:
    low = surface.lower()
    if surface in _PUNCT_TAGS:
        return _PUNCT_TAGS[surface]
    if low in _LEXICON:
        return _LEXICON[low]
    if surface[0].isdigit():
        return "CD"
    # mid-sentence capitalization wins over suffix shape
    if idx > 0 and surface[:1].isupper():
        return "NNP"
    if prev_tag in ("TO", "MD"):
        return "VB"
    if prev_tag in ("PRP", "NN", "NNS", "NNP") and low.endswith("s"):
        return "VBZ"
    return _suffix_tag(low)


def tag_text(text: str) -> list[list[tuple[str, str]]]:
    """Tagged sentences; each ends with its terminator tagged '.'.

    Sentences without any word token are skipped.  Empty results trigger a
    warning rather than an error so batch jobs keep moving.
    """
    sentences = []
    for body, term in _sentence_chunks(text):
        words = _WORD.findall(body)
        if not words:
            continue
        tagged = []
        prev = ""
        for idx, surface in enumerate(words):
            tag = _tag_word(surface, idx, prev)
            tagged.append((surface, tag))
            prev = tag
        tagged.append((term, END_TAG))
        sentences.append(tagged)
    if not sentences:
        warnings.warn("no terminated sentences found; output is empty")
    return sentences
