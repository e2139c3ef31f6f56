"""Command-line front end.

Subcommands: build (text -> PTS JSON), dist (PTS JSON or two texts ->
distances), bisim (PTS JSON -> partition), classify (text vs. category
directory -> report).  Exit codes: 0 success, 2 usage or input error,
1 internal error.  stdout carries only the payload; diagnostics go to
stderr.  Identical invocations on identical files produce byte-identical
stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from pathlib import Path

from ptsdist import bisim as bisim_mod
from ptsdist import distance as distance_mod
from ptsdist import pts as pts_mod
from ptsdist.classify import (
    FEATURES,
    TextInputs,
    build_feature,
    classify,
    render_table,
)
from ptsdist.classify import to_json as classify_to_json
from ptsdist.distance import DistanceParams
from ptsdist.features import DEFAULT_TERMINATORS, combine


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--discount", type=float, default=0.9, metavar="C")
    p.add_argument("--accuracy", type=float, default=0.01, metavar="ALPHA")
    p.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for the pair solves; 1 = sequential",
    )


def _add_common(p: argparse.ArgumentParser, formats=("json", "table")) -> None:
    p.add_argument("--output", metavar="PATH", help="write payload here instead of stdout")
    p.add_argument("--format", choices=formats, default=formats[0])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ptsdist",
        description="Behavioural distances between texts via probabilistic "
        "transition systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="turn a text file into a PTS JSON file")
    p.add_argument("--feature", choices=FEATURES, required=True)
    p.add_argument("input", metavar="TEXT")
    p.add_argument("--terminators", default=DEFAULT_TERMINATORS)
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser(
        "dist",
        help="distance matrix of a PTS JSON file, or the distance between "
        "two text files under --feature",
    )
    p.add_argument("inputs", nargs="+", metavar="PATH")
    p.add_argument("--feature", choices=FEATURES)
    p.add_argument("--terminators", default=DEFAULT_TERMINATORS)
    _add_params(p)
    _add_common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("bisim", help="bisimulation partition of a PTS JSON file")
    p.add_argument("input", metavar="PTS_JSON")
    _add_common(p, formats=("table", "json"))
    p.set_defaults(func=cmd_bisim)

    p = sub.add_parser("classify", help="rank category corpora by distance to a text")
    p.add_argument("--input", required=True, metavar="PATH")
    p.add_argument("--categories", required=True, metavar="DIR")
    p.add_argument(
        "--feature",
        action="append",
        choices=FEATURES,
        dest="features",
        help="repeatable; default: all of " + ", ".join(FEATURES),
    )
    p.add_argument("--terminators", default=DEFAULT_TERMINATORS)
    _add_params(p)
    _add_common(p, formats=("table", "json"))
    p.set_defaults(func=cmd_classify)
    return parser


def _emit(payload: str, output: str | None) -> None:
    if output:
        Path(output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise ValueError(f"no such file: {path}")
    return p.read_text(encoding="utf-8")


def _load_pts(path: str) -> pts_mod.Pts:
    pts = pts_mod.from_json(_read(path))
    report = pts_mod.validate(pts)
    if not report.ok:
        raise ValueError(f"{path}: invalid PTS: " + "; ".join(report.violations))
    return pts


_KIND_BY_SUFFIX = {".txt": "raw_text", ".tsv": "tagged_tsv", ".trees": "trees_text"}


def _inputs_from_path(path: str) -> TextInputs:
    """Collect the per-kind representations from a file or a directory.

    Files are classified by suffix (.txt raw, .tsv tagged, .trees bracketed);
    a directory contributes the sorted concatenation of each kind it holds.
    """
    p = Path(path)
    if p.is_file():
        kind = _KIND_BY_SUFFIX.get(p.suffix)
        if kind is None:
            raise ValueError(
                f"{path}: cannot infer input kind from suffix {p.suffix!r} "
                f"(expected one of {', '.join(_KIND_BY_SUFFIX)})"
            )
        return TextInputs(**{kind: p.read_text(encoding="utf-8")})
    if not p.is_dir():
        raise ValueError(f"no such file or directory: {path}")
    parts: dict[str, list[str]] = {k: [] for k in _KIND_BY_SUFFIX.values()}
    for child in sorted(p.iterdir()):
        kind = _KIND_BY_SUFFIX.get(child.suffix)
        if child.is_file() and kind is not None:
            parts[kind].append(child.read_text(encoding="utf-8"))
    fields = {
        kind: "\n\n".join(texts) for kind, texts in parts.items() if texts
    }
    if not fields:
        raise ValueError(f"{path}: no .txt, .tsv or .trees files found")
    return TextInputs(**fields)


def _built_for_feature(path: str, feature: str, terminators: str):
    """Read `path` as the input kind `feature` expects and build its system."""
    text = _read(path)
    kinds = {"letters": "raw_text", "pos": "tagged_tsv", "grammar": "trees_text"}
    return build_feature(
        TextInputs(**{kinds[feature]: text}), feature, terminators
    )


def _render_matrix_table(dm: distance_mod.DistanceMatrix) -> str:
    stub = max(len(l) for l in dm.labels)
    widths = [max(len(l), 6) for l in dm.labels]
    header = " ".join(
        [" " * stub] + [l.rjust(w) for l, w in zip(dm.labels, widths)]
    ).rstrip()
    lines = [header]
    for label, row in zip(dm.labels, dm.values):
        cells = [f"{v:.4f}".rjust(w) for v, w in zip(row, widths)]
        lines.append(" ".join([label.ljust(stub)] + cells).rstrip())
    return "\n".join(lines) + "\n"


def cmd_build(args) -> int:
    built = _built_for_feature(args.input, args.feature, args.terminators)
    _emit(pts_mod.to_json(built.pts) + "\n", args.output)
    return 0


def cmd_dist(args) -> int:
    params = DistanceParams(discount=args.discount, accuracy=args.accuracy)
    if len(args.inputs) == 1:
        dm = distance_mod.distance_matrix(
            _load_pts(args.inputs[0]), params, threads=args.threads
        )
        if args.format == "json":
            payload = distance_mod.to_json(dm) + "\n"
        else:
            payload = _render_matrix_table(dm)
        _emit(payload, args.output)
        return 0
    if len(args.inputs) != 2:
        raise ValueError("dist takes one PTS JSON file or exactly two text files")
    if not args.feature:
        raise ValueError("--feature is required when comparing two text files")
    combined = combine(
        _built_for_feature(args.inputs[0], args.feature, args.terminators),
        _built_for_feature(args.inputs[1], args.feature, args.terminators),
    )
    value = distance_mod.distance_between(
        combined.pts, combined.start_a, combined.start_b, params, threads=args.threads
    )
    if args.format == "json":
        payload = (
            json.dumps(
                {
                    "format_version": 1,
                    "feature": args.feature,
                    "c": params.discount,
                    "alpha": params.accuracy,
                    "iterations": params.iterations,
                    "labels": [
                        combined.pts.label(combined.start_a),
                        combined.pts.label(combined.start_b),
                    ],
                    "distance": repr(value),
                },
                indent=2,
            )
            + "\n"
        )
    else:
        payload = f"distance {value:.4f}\n"
    _emit(payload, args.output)
    return 0


def cmd_bisim(args) -> int:
    pts = _load_pts(args.input)
    partition = bisim_mod.coarsest_bisimulation(pts)
    if args.format == "json":
        payload = (
            json.dumps(
                {
                    "format_version": 1,
                    "blocks": [
                        [pts.label(s) for s in block] for block in partition.blocks
                    ],
                },
                indent=2,
            )
            + "\n"
        )
    else:
        lines = [
            ",".join(pts.label(s) for s in block) for block in partition.blocks
        ]
        payload = "\n".join(lines) + "\n"
    _emit(payload, args.output)
    return 0


def cmd_classify(args) -> int:
    params = DistanceParams(discount=args.discount, accuracy=args.accuracy)
    cat_root = Path(args.categories)
    if not cat_root.is_dir():
        raise ValueError(f"no such category directory: {args.categories}")
    subdirs = sorted(d for d in cat_root.iterdir() if d.is_dir())
    if not subdirs:
        raise ValueError(f"{args.categories}: no category subdirectories found")
    categories = {d.name: _inputs_from_path(str(d)) for d in subdirs}
    report = classify(
        _inputs_from_path(args.input),
        categories,
        features=tuple(args.features) if args.features else FEATURES,
        params=params,
        terminators=args.terminators,
        threads=args.threads,
    )
    if args.format == "json":
        payload = classify_to_json(report) + "\n"
    else:
        payload = render_table(report)
    _emit(payload, args.output)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # argparse usage errors already printed
        code = exc.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
