from annotate.cli import main


def test_cli_pos_stdout(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("The dog runs.")
    assert main(["pos", "--input", str(src)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "The\tDT"


def test_cli_trees_directory(tmp_path):
    d = tmp_path / "corpus"
    d.mkdir()
    (d / "x.txt").write_text("A bird sings.")
    out = tmp_path / "out"
    code = main(["trees", "--input", str(d), "--output", str(out), "--workers", "2"])
    assert code == 0
    assert (out / "x.trees").read_text().startswith("(S ")
    assert (out / "manifest.json").is_file()


def test_cli_errors(tmp_path, capsys):
    assert main(["pos", "--input", str(tmp_path / "missing.txt")]) == 2
    assert "error:" in capsys.readouterr().err

    assert main(["fetch", "--corpus", "nope", "--output", str(tmp_path)]) == 2
    assert "supported" in capsys.readouterr().err

    assert main(["bogus"]) == 2
