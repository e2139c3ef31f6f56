"""Round-trip acceptance: emitted TSV and tree files must be accepted by
the distance tool, exercised through its CLI so that only the documented
file formats couple the two packages."""

import json
import subprocess
import sys

from annotate.pipeline import annotate_pos, annotate_trees


def _report(name: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}: {name}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, f"{name}: {detail}"


_BASE = [
    "The old dog sleeps by the door.",
    "A small cat watches the garden!",
    "She walks to town with her friend.",
    "Rain fell on the quiet streets.",
    "They read books about distant lands.",
    "He quickly opened the heavy gate.",
    "Numbers like 42 appear in strange places.",
    "Every child knows this simple song.",
    "Birds sing, and the morning begins.",
    "We waited for the late train?",
]


def _sample_text(n_sentences: int = 50) -> str:
    return " ".join(_BASE[i % len(_BASE)] for i in range(n_sentences))


def _balanced(line: str) -> bool:
    depth = 0
    for ch in line:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                return False
    return depth == 0


def test_round_trip_through_distance_cli(tmp_path):
    text = _sample_text()
    tsv = annotate_pos(text)
    trees = annotate_trees(text)

    n_tagged = len(tsv.strip("\n").split("\n\n"))
    tree_lines = trees.strip("\n").split("\n")
    _report(
        "fifty-sentence sample annotated",
        n_tagged == 50 and len(tree_lines) == 50,
        f"{n_tagged} tagged sentences, {len(tree_lines)} trees",
    )

    unbalanced = [line for line in tree_lines if not _balanced(line)]
    _report(
        "bracket balance on every tree line",
        not unbalanced,
        f"{len(unbalanced)} unbalanced of {len(tree_lines)}",
    )

    tsv_path = tmp_path / "sample.tsv"
    tsv_path.write_text(tsv, encoding="utf-8")
    trees_path = tmp_path / "sample.trees"
    trees_path.write_text(trees, encoding="utf-8")

    runs = {}
    for feature, path in (("pos", tsv_path), ("grammar", trees_path)):
        runs[feature] = subprocess.run(
            [sys.executable, "-m", "ptsdist", "build", "--feature", feature, str(path)],
            capture_output=True,
            text=True,
            timeout=120,
        )
    _report(
        "distance tool builds from both outputs",
        all(p.returncode == 0 for p in runs.values()),
        "; ".join(f"{k}: exit {p.returncode}" for k, p in runs.items()),
    )
    for proc in runs.values():
        payload = json.loads(proc.stdout)
        assert payload["rows"]
        assert "end" in payload["labels"]
