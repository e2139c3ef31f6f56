import hashlib
import json

import pytest

from annotate.pipeline import (
    MANIFEST_NAME,
    CorpusJob,
    annotate_pos,
    annotate_trees,
    run_job,
)


def test_tsv_shape():
    tsv = annotate_pos("The dog runs. A cat sleeps.")
    blocks = tsv.strip("\n").split("\n\n")
    assert len(blocks) == 2
    first = [line.split("\t") for line in blocks[0].split("\n")]
    assert [surface for surface, _ in first] == ["The", "dog", "runs", "."]
    assert first[-1][1] == "."
    assert tsv.endswith(".\t.\n")


def test_trees_one_per_line():
    out = annotate_trees("A bird sings. It flies away!")
    lines = out.strip("\n").split("\n")
    assert len(lines) == 2
    assert all(line.startswith("(S ") for line in lines)


def test_empty_outputs_warn():
    with pytest.warns(UserWarning):
        assert annotate_pos("") == ""
    with pytest.warns(UserWarning):
        assert annotate_trees("") == ""


def test_run_job_manifest(tmp_path):
    a = tmp_path / "a.txt"
    a.write_text("The dog runs.")
    b = tmp_path / "b.txt"
    b.write_text("A cat sleeps. It purrs.")
    out = tmp_path / "out"
    manifest = run_job(CorpusJob((str(a), str(b)), str(out)), workers=2)
    assert set(manifest["files"]) == {"a.tsv", "a.trees", "b.tsv", "b.trees"}
    for name, digest in manifest["files"].items():
        data = (out / name).read_bytes()
        assert digest == "sha256:" + hashlib.sha256(data).hexdigest()
    on_disk = json.loads((out / MANIFEST_NAME).read_text())
    assert on_disk == manifest
    assert manifest["tagger_version"] and manifest["chunker_version"]
    assert not list(out.glob("*.tmp"))


def test_job_validation(tmp_path):
    with pytest.raises(ValueError, match="kinds"):
        CorpusJob(("x.txt",), "o", ("nope",))
    with pytest.raises(ValueError, match="input"):
        CorpusJob((), "o")
    a = tmp_path / "s" / "a.txt"
    a.parent.mkdir()
    a.write_text("Hi there.")
    b = tmp_path / "t" / "a.txt"
    b.parent.mkdir()
    b.write_text("Bye now.")
    with pytest.raises(ValueError, match="collide"):
        run_job(CorpusJob((str(a), str(b)), str(tmp_path / "o")))
