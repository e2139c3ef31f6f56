#!/usr/bin/env python3
"""Genre-table replication harness.

The published stylometric genre tables cannot be reproduced numerically:
the exact corpus excerpts, the tagger that produced the POS streams, and
the (c, alpha) parameters behind them are unspecified.  What this script
replicates is the report itself: for a probe text and a directory of
category corpora it prints the same table shape, one row per feature plus
a Euclid row, one column per category, entries to four decimals.

Two modes:

  --demo            run on the built-in seeded synthetic letter corpora
                    (three generators), printing one table per test text
  --input/--categories
                    run on your own corpora; categories is a directory
                    with one subdirectory per category holding .txt/.tsv/
                    .trees files

Example:
  python scripts/replicate_genre_tables.py --demo --tests 3
  python scripts/replicate_genre_tables.py --input probe.txt \
      --categories corpora/ --feature letters --feature pos
"""

from __future__ import annotations

import argparse
import sys

from ptsdist.classify import FEATURES, TextInputs, classify, render_table
from ptsdist.cli import _inputs_from_path
from ptsdist.distance import DistanceParams
from ptsdist.features import DEFAULT_TERMINATORS
from ptsdist.synthetic import make_corpus


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--demo", action="store_true")
    parser.add_argument("--tests", type=int, default=20,
                        help="demo mode: how many test texts to classify")
    parser.add_argument("--seed", type=int, default=1234)
    parser.add_argument("--input", metavar="PATH")
    parser.add_argument("--categories", metavar="DIR")
    parser.add_argument("--feature", action="append", choices=FEATURES,
                        dest="features")
    parser.add_argument("--discount", type=float, default=0.9)
    parser.add_argument("--accuracy", type=float, default=0.01)
    parser.add_argument("--terminators", default=DEFAULT_TERMINATORS)
    parser.add_argument("--threads", type=int, default=1)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    params = DistanceParams(discount=args.discount, accuracy=args.accuracy)
    if args.demo:
        category_texts, tests = make_corpus(seed=args.seed)
        categories = {
            name: TextInputs(raw_text=text)
            for name, text in category_texts.items()
        }
        correct = 0
        shown = tests[: max(0, args.tests)]
        for idx, (true_name, text) in enumerate(shown, start=1):
            report = classify(
                TextInputs(raw_text=text),
                categories,
                features=("letters",),
                params=params,
                threads=args.threads,
            )
            correct += report.best == true_name
            print(f"test {idx} (drawn from {true_name}) -> {report.best}\n")
            print(render_table(report))
        print(f"accuracy: {correct}/{len(shown)}")
        return 0
    if not args.input or not args.categories:
        print("error: need --demo, or both --input and --categories",
              file=sys.stderr)
        return 2
    from pathlib import Path

    cat_root = Path(args.categories)
    subdirs = sorted(d for d in cat_root.iterdir() if d.is_dir())
    if not subdirs:
        print(f"error: {args.categories}: no category subdirectories",
              file=sys.stderr)
        return 2
    categories = {d.name: _inputs_from_path(str(d)) for d in subdirs}
    text = _inputs_from_path(args.input)
    features = tuple(args.features) if args.features else FEATURES
    report = classify(
        text,
        categories,
        features=features,
        params=params,
        terminators=args.terminators,
        threads=args.threads,
    )
    print(render_table(report))
    print(f"closest category: {report.best}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
