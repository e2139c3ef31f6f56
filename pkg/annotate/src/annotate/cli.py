"""Command line: annotate pos|trees|fetch."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from annotate.corpora import fetch_corpus
from annotate.pipeline import CorpusJob, annotate_pos, annotate_trees, run_job


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="annotate")
    sub = parser.add_subparsers(dest="command", required=True)
    for kind, blurb in (("pos", "tagged TSV"), ("trees", "bracketed trees")):
        p = sub.add_parser(kind, help=f"emit {blurb}")
        p.add_argument("--input", required=True,
                       help="text file, or directory of .txt files")
        p.add_argument("--output",
                       help="output file (file input) or directory (directory input)")
        p.add_argument("--workers", type=int, default=1)
    p = sub.add_parser("fetch", help="download a public corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--output", required=True, help="directory to hold corpora")
    return parser


def _cmd_annotate(args, kind: str) -> int:
    src = Path(args.input)
    if src.is_dir():
        if not args.output:
            raise ValueError("--output directory is required for directory input")
        inputs = tuple(sorted(str(p) for p in src.glob("*.txt")))
        if not inputs:
            raise ValueError(f"{args.input}: no .txt files found")
        run_job(CorpusJob(inputs, args.output, (kind,)), workers=args.workers)
        return 0
    if not src.is_file():
        raise ValueError(f"no such file: {args.input}")
    render = annotate_pos if kind == "pos" else annotate_trees
    data = render(src.read_text(encoding="utf-8"))
    if args.output:
        Path(args.output).write_text(data, encoding="utf-8")
    else:
        sys.stdout.write(data)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.command in ("pos", "trees"):
            return _cmd_annotate(args, args.command)
        fetch_corpus(args.corpus, args.output)
        return 0
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        import traceback

        traceback.print_exc()
        return 1
