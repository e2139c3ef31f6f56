"""Corpus jobs: raw text in, tagged TSV and bracketed trees out.

Only documented text formats couple this package to the distance tool:
TSV lines of 'surface<TAB>tag' with blank-line sentence breaks and the
terminator tagged '.', and one balanced bracketed tree per line.  Outputs
are written atomically and a manifest records versions and digests.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from annotate.chunker import CHUNKER_VERSION, chunk_sentence
from annotate.tagger import TAGGER_VERSION, tag_text

MANIFEST_NAME = "manifest.json"


def annotate_pos(text: str) -> str:
    """TSV rendering of the tagged sentences of `text`."""
    blocks = [
        "\n".join(f"{surface}\t{tag}" for surface, tag in sentence)
        for sentence in tag_text(text)
    ]
    return "\n\n".join(blocks) + "\n" if blocks else ""


def annotate_trees(text: str) -> str:
    """One bracketed tree per sentence of `text`, newline-terminated."""
    return "".join(chunk_sentence(s) + "\n" for s in tag_text(text))


@dataclass(frozen=True)
class CorpusJob:
    inputs: tuple[str, ...]
    output_dir: str
    kinds: tuple[str, ...] = ("pos", "trees")

    def __post_init__(self) -> None:
        bad = [k for k in self.kinds if k not in _RENDER]
        if bad:
            raise ValueError(f"unknown annotation kinds: {bad}")
        if not self.inputs:
            raise ValueError("no input files")


_RENDER = {"pos": (annotate_pos, ".tsv"), "trees": (annotate_trees, ".trees")}


def _atomic_write(path: Path, data: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(data, encoding="utf-8")
    os.replace(tmp, path)


def _digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def _process_one(src: str, out_dir: Path, kinds: tuple[str, ...]) -> dict[str, str]:
    text = Path(src).read_text(encoding="utf-8")
    written = {}
    for kind in kinds:
        render, suffix = _RENDER[kind]
        data = render(text)
        name = Path(src).stem + suffix
        _atomic_write(out_dir / name, data)
        written[name] = _digest(data.encode("utf-8"))
    return written


def run_job(job: CorpusJob, workers: int = 1) -> dict:
    """Annotate every input into job.output_dir; returns the manifest."""
    stems = [Path(s).stem for s in job.inputs]
    if len(set(stems)) != len(stems):
        raise ValueError("duplicate input stems would collide in the output directory")
    out_dir = Path(job.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    files: dict[str, str] = {}
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = pool.map(
                lambda src: _process_one(src, out_dir, job.kinds), job.inputs
            )
            for written in results:
                files.update(written)
    else:
        for src in job.inputs:
            files.update(_process_one(src, out_dir, job.kinds))
    manifest = {
        "format_version": 1,
        "tagger_version": TAGGER_VERSION,
        "chunker_version": CHUNKER_VERSION,
        "files": dict(sorted(files.items())),
    }
    _atomic_write(out_dir / MANIFEST_NAME, json.dumps(manifest, indent=2) + "\n")
    return manifest
