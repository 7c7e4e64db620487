"""Command line front end.

Four subcommands cover the library surface: ``convert`` dumps the word
for every instance of a series file, ``verify-bound`` fuzzes the
distance lower bound on random pairs, ``evaluate`` scores one dataset
under one scheme, and ``benchmark`` builds the full scheme-by-dataset
matrix.  Exit status is 0 on success, 1 on operational failure (bad
input files, a bound violation), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from trendsax.benchmark import (
    BenchmarkConfig,
    REPORT_FORMATS,
    emit_report,
    run_benchmark,
)
from trendsax.classify import DEFAULT_ALPHABET_RANGE, evaluate
from trendsax.core import make_alphabet_table, paa, symbolize, znormalize
from trendsax.dataset import DatasetPair, load_dataset_pair, load_ucr
from trendsax.distance import verify_lower_bound
from trendsax.segmentation import POLICIES, SCHEMES, segment

__all__ = ["main"]


def _parse_alphabet_range(text: str) -> tuple[int, ...]:
    """Accept ``LO:HI`` (inclusive) or a single size."""
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            return (int(lo),)
        return tuple(range(int(lo), int(hi) + 1))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or LO:HI range, got {text!r}"
        ) from None


def _add_word_length_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--word-count", type=int, metavar="M",
                       help="fixed number of word symbols")
    group.add_argument("--ratio", type=int, default=4, metavar="R",
                       help="symbols per R source points when --word-count is absent (default 4)")


def _add_common_flags(parser: argparse.ArgumentParser, schemes_default: str = "classic") -> None:
    parser.add_argument("--scheme", default=schemes_default,
                        help=f"segmentation scheme: {', '.join(SCHEMES)}, or 'all'")
    parser.add_argument("--policy", choices=POLICIES, default="truncate",
                        help="handling of lengths not divisible by the word count")
    _add_word_length_flags(parser)


def _schemes_from(arg: str) -> tuple[str, ...]:
    if arg == "all":
        return SCHEMES
    schemes = tuple(s.strip() for s in arg.split(",") if s.strip())
    for scheme in schemes:
        if scheme not in SCHEMES:
            raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES} or 'all'")
    if not schemes:
        raise ValueError("no scheme given")
    return schemes


def _single_scheme_from(arg: str) -> str:
    schemes = _schemes_from(arg)
    if len(schemes) != 1:
        raise ValueError(f"this command takes exactly one scheme, got {arg!r}")
    return schemes[0]


def _word_count_for(args: argparse.Namespace, n: int) -> int:
    if args.word_count is not None:
        return args.word_count
    return max(1, n // args.ratio)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_convert(args: argparse.Namespace) -> int:
    scheme = _single_scheme_from(args.scheme)
    data = load_ucr(args.file)
    m = _word_count_for(args, data.n)
    seg = segment(scheme, data.n, m, args.policy)
    table = make_alphabet_table(args.alphabet)
    records = []
    for index, (row, label) in enumerate(zip(data.series, data.labels)):
        word = symbolize(paa(znormalize(row), seg), table)
        records.append((index, int(label), word.to_letters()))
    if args.format == "json":
        payload = [{"index": i, "label": lab, "word": w} for i, lab, w in records]
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "label", "word"])
        writer.writerows(records)
        text = buf.getvalue()
    else:
        text = "".join(f"{i}\t{lab}\t{w}\n" for i, lab, w in records)
    _write_output(text, args.out)
    return 0


def _cmd_verify_bound(args: argparse.Namespace) -> int:
    schemes = _schemes_from(args.scheme)
    rng = np.random.default_rng(args.seed)
    m = _word_count_for(args, args.length)
    checked = 0
    violations = 0
    worst = float("inf")
    for _ in range(args.pairs):
        s = rng.standard_normal(args.length)
        t = rng.standard_normal(args.length)
        for scheme in schemes:
            report = verify_lower_bound(s, t, scheme, m, args.alphabet, args.policy)
            checked += 1
            worst = min(worst, report.slack)
            if not report.holds:
                violations += 1
    status = "ok" if violations == 0 else "VIOLATED"
    print(
        f"{status}: {checked} checks ({args.pairs} pairs x {len(schemes)} schemes), "
        f"length={args.length} m={m} alphabet={args.alphabet} seed={args.seed}, "
        f"min slack={worst:.6g}"
    )
    return 0 if violations == 0 else 1


def _report_dict(report) -> dict[str, object]:
    return {
        "dataset": report.dataset,
        "scheme": report.scheme,
        "alpha_chosen": report.alpha,
        "m": report.m,
        "train_error": report.train_error,
        "test_error": report.test_error,
        "misclassified": report.misclassified,
        "total": report.total,
    }


def _cmd_evaluate(args: argparse.Namespace) -> int:
    scheme = _single_scheme_from(args.scheme)
    pair = load_dataset_pair(args.dataset)
    m = _word_count_for(args, pair.train.n)
    report = evaluate(pair.train, pair.test, scheme, m,
                      alphabet_range=args.alphabet_range, policy=args.policy,
                      dataset=pair.name)
    record = _report_dict(report)
    if args.format == "json":
        text = json.dumps(record, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(record.keys())
        writer.writerow([repr(v) if isinstance(v, float) else v for v in record.values()])
        text = buf.getvalue()
    else:
        text = "".join(f"{key}: {value}\n" for key, value in record.items())
    _write_output(text, args.out)
    return 0


def _discover_pairs(paths: list[str]) -> list[DatasetPair]:
    pairs = []
    for raw in paths:
        root = Path(raw)
        if not root.is_dir():
            raise FileNotFoundError(f"dataset directory {root} does not exist")
        if any(root.glob("*_TRAIN*")):
            pairs.append(load_dataset_pair(root))
            continue
        children = sorted(p for p in root.iterdir() if p.is_dir() and any(p.glob("*_TRAIN*")))
        if not children:
            raise FileNotFoundError(f"{root}: no *_TRAIN file here or in any subdirectory")
        pairs.extend(load_dataset_pair(child) for child in children)
    return pairs


def _cmd_benchmark(args: argparse.Namespace) -> int:
    pairs = _discover_pairs(args.datasets)
    config = BenchmarkConfig(
        schemes=_schemes_from(args.scheme),
        alphabet_range=args.alphabet_range,
        word_count=args.word_count,
        ratio=args.ratio,
        policy=args.policy,
        jobs=args.jobs,
    )
    matrix = run_benchmark(pairs, config)
    _write_output(emit_report(matrix, args.format), args.out)
    if any(row.error is not None for row in matrix.rows):
        for row in matrix.rows:
            if row.error is not None:
                print(f"error: {row.dataset}: {row.error}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trendsax",
        description="Symbolic time-series words with trend-aware segmentation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    convert = sub.add_parser("convert", help="dump the word for each instance of a series file")
    convert.add_argument("file", help="series file in label-first text format")
    _add_common_flags(convert)
    convert.add_argument("--alphabet", type=int, default=4, help="alphabet size (default 4)")
    convert.add_argument("--format", choices=("text", "csv", "json"), default="text")
    convert.add_argument("--out", help="write output to this file instead of stdout")
    convert.set_defaults(func=_cmd_convert)

    verify = sub.add_parser("verify-bound", help="fuzz the distance lower bound on random pairs")
    _add_common_flags(verify, schemes_default="all")
    verify.add_argument("--alphabet", type=int, default=4, help="alphabet size (default 4)")
    verify.add_argument("--pairs", type=int, default=200, help="random pairs per scheme (default 200)")
    verify.add_argument("--length", type=int, default=128, help="series length (default 128)")
    verify.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    verify.set_defaults(func=_cmd_verify_bound)

    single = sub.add_parser("evaluate", help="tune and score one dataset under one scheme")
    single.add_argument("dataset", help="directory holding *_TRAIN and *_TEST files")
    _add_common_flags(single)
    single.add_argument("--alphabet-range", type=_parse_alphabet_range,
                        default=tuple(DEFAULT_ALPHABET_RANGE), metavar="LO:HI",
                        help="alphabet sizes swept during tuning (default 3:20)")
    single.add_argument("--format", choices=("text", "csv", "json"), default="text")
    single.add_argument("--out", help="write output to this file instead of stdout")
    single.set_defaults(func=_cmd_evaluate)

    bench = sub.add_parser("benchmark", help="evaluate every scheme on every dataset")
    bench.add_argument("datasets", nargs="+",
                       help="dataset directories, or roots containing them")
    _add_common_flags(bench, schemes_default="all")
    bench.add_argument("--alphabet-range", type=_parse_alphabet_range,
                       default=tuple(DEFAULT_ALPHABET_RANGE), metavar="LO:HI",
                       help="alphabet sizes swept during tuning (default 3:20)")
    bench.add_argument("--format", choices=REPORT_FORMATS, default="csv")
    bench.add_argument("--jobs", type=int, default=1,
                       help="worker processes; results are identical for any value")
    bench.add_argument("--out", help="write the report to this file instead of stdout")
    bench.set_defaults(func=_cmd_benchmark)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
