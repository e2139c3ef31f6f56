"""Public-corpus acquisition.

nltk is imported lazily and only here, so the annotation pipeline itself
has no third-party dependencies.  Fetches are cached behind a marker file
and repeated calls are no-ops.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

SUPPORTED = ("brown", "gutenberg", "inaugural", "reuters")

_FETCH_MARKER = "fetched.json"


def _detok(words) -> str:
    return re.sub(r"\s+([.,;:!?])", r"\1", " ".join(words))


def _nltk_loader(name: str, dest: Path) -> dict:
    try:
        import nltk
    except ImportError as exc:
        raise RuntimeError(
            "fetching corpora needs the optional nltk dependency; "
            "install it with: pip install nltk"
        ) from exc
    try:
        nltk.download(name, quiet=True, raise_on_error=True)
        corpus = getattr(nltk.corpus, name)
        counts: dict[str, int] = {}
        if name == "brown":
            # one raw-text file per genre, hyphenated directory names
            for cat in corpus.categories():
                cat_dir = dest / cat.replace("_", "-")
                cat_dir.mkdir(parents=True, exist_ok=True)
                text = "\n".join(_detok(s) for s in corpus.sents(categories=cat))
                (cat_dir / "corpus.txt").write_text(text, encoding="utf-8")
                counts[cat] = len(text)
        else:
            for fid in corpus.fileids():
                out = dest / (str(fid).replace("/", "_") + ".txt")
                out.write_text(corpus.raw(fid), encoding="utf-8")
                counts[str(fid)] = out.stat().st_size
        return counts
    except Exception as exc:
        raise RuntimeError(
            f"could not download corpus {name!r}: {exc}; if this machine is "
            f"offline, run nltk.download({name!r}) on a connected one and "
            f"copy the files into place, then re-run"
        ) from exc


def fetch_corpus(name: str, dest_root: str, loader=None) -> Path:
    """Materialize corpus `name` under dest_root/name and return that path.

    A marker file makes repeated fetches idempotent.  `loader` exists as a
    seam for tests; the default downloads through nltk.
    """
    if name not in SUPPORTED:
        raise ValueError(
            f"unknown corpus {name!r}; supported: {', '.join(SUPPORTED)}"
        )
    dest = Path(dest_root) / name
    marker = dest / _FETCH_MARKER
    if marker.is_file():
        return dest
    loader = loader or _nltk_loader
    dest.mkdir(parents=True, exist_ok=True)
    counts = loader(name, dest)
    marker.write_text(
        json.dumps({"corpus": name, "files": counts}, indent=2) + "\n",
        encoding="utf-8",
    )
    return dest
