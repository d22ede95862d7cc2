"""seqcover command line: cover, dist, matrix, bench.

Exit codes: 0 success, 2 I/O error (unreadable or undecodable input),
3 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from random import Random

from .backend import automaton_class, available_backends, default_backend
from .core import (
    ReferenceSet,
    SegmentKind,
    SymbolSequence,
    TokenizationMode,
    render,
    tokenize,
)
from .covering import covering_similarity, optimal_covering, round_half_up
from .index import SubstringIndex
from .pairwise import levenshtein, normalized_levenshtein, pairwise_score

EXIT_OK = 0
EXIT_IO = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad arguments; remap to the usage exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class ReportSegment:
    text: str
    kind: str
    source: str | None
    source_offset: int | None
    lifted: bool


@dataclass(frozen=True)
class PlagiarismReport:
    suspect: str
    suspect_length: int
    segment_count: int
    directed_similarity: Fraction
    covering_distance: Fraction | None
    segments: tuple[ReportSegment, ...]


def build_plagiarism_report(
    refs: ReferenceSet,
    query: SymbolSequence,
    mode: TokenizationMode,
    min_highlight: int = 12,
    suspect_label: str = "<query>",
    backend: str | None = None,
) -> PlagiarismReport:
    """Cover the query with reference substrings and describe every segment."""
    if len(query) == 0:
        raise UsageError("query is empty after tokenization")
    index = SubstringIndex(refs, backend=backend)
    covering = optimal_covering(index, query)
    segments = []
    for seg in covering:
        matched = seg.kind is SegmentKind.MATCHED
        segments.append(
            ReportSegment(
                text=render(query.slice(seg.start, seg.end), mode),
                kind=seg.kind.value,
                source=seg.source_id,
                source_offset=seg.source_offset,
                lifted=matched and seg.length >= min_highlight,
            )
        )
    n = len(query)
    directed = Fraction(n - covering.cardinality + 1, n)
    distance = None
    if len(refs) == 1:
        distance = pairwise_score(query, refs.members[0][1], backend=backend).distance
    return PlagiarismReport(
        suspect=suspect_label,
        suspect_length=n,
        segment_count=covering.cardinality,
        directed_similarity=directed,
        covering_distance=distance,
        segments=tuple(segments),
    )


# ---------------------------------------------------------------------------
# input handling

def _mode(args) -> TokenizationMode:
    return TokenizationMode(args.mode)


def _read_file(path: str, mode: TokenizationMode) -> SymbolSequence:
    if mode is TokenizationMode.BYTE:
        return tokenize(Path(path).read_bytes(), mode)
    return tokenize(Path(path).read_text(encoding="utf-8"), mode)


def _collect_ref_files(paths: list[str]) -> list[str]:
    files: list[str] = []
    for raw in paths:
        path = Path(raw)
        if path.is_dir():
            files.extend(sorted(str(p) for p in path.rglob("*") if p.is_file()))
        else:
            files.append(raw)
    return files


def _load_references(paths: list[str], mode: TokenizationMode, split_lines: bool) -> ReferenceSet:
    members: list[tuple[str, SymbolSequence]] = []
    for path in _collect_ref_files(paths):
        if split_lines:
            if mode is TokenizationMode.BYTE:
                lines = Path(path).read_bytes().split(b"\n")
            else:
                lines = Path(path).read_text(encoding="utf-8").splitlines()
            for lineno, line in enumerate(lines, start=1):
                members.append((f"{path}:{lineno}", tokenize(line, mode)))
        else:
            members.append((path, _read_file(path, mode)))
    try:
        return ReferenceSet(members)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# cover

def _cmd_cover(args) -> int:
    mode = _mode(args)
    refs = _load_references(args.refs, mode, args.split_lines)
    query = _read_file(args.query, mode)
    report = build_plagiarism_report(
        refs, query, mode, min_highlight=args.min_highlight, suspect_label=args.query
    )
    if args.format == "json":
        print(json.dumps(_report_to_json(report), indent=2, ensure_ascii=False))
        return EXIT_OK
    print(f"suspect: {report.suspect}  ({report.suspect_length} symbols)")
    print(f"references: {len(refs)} member(s), {refs.total_length} symbols")
    print(f"segments: {report.segment_count}")
    print(f"directed similarity: {round_half_up(report.directed_similarity)}")
    if report.covering_distance is not None:
        print(f"covering distance: {round_half_up(report.covering_distance)}")
    print("covering:")
    for seg in report.segments:
        prefix = ">>" if seg.lifted else "  "
        note = ""
        if seg.lifted:
            note = f"    [{seg.source} @ {seg.source_offset}]"
        elif seg.kind == "fallback":
            note = "    (fallback)"
        print(f"{prefix} {seg.text!r}{note}")
    return EXIT_OK


def _report_to_json(report: PlagiarismReport) -> dict:
    doc: dict = {
        "suspect_length": report.suspect_length,
        "segment_count": report.segment_count,
        "directed_similarity": float(report.directed_similarity),
        "directed_similarity_display": round_half_up(report.directed_similarity),
    }
    if report.covering_distance is not None:
        doc["covering_distance"] = float(report.covering_distance)
        doc["covering_distance_display"] = round_half_up(report.covering_distance)
    segments = []
    for seg in report.segments:
        entry: dict = {"text": seg.text, "kind": seg.kind}
        if seg.source is not None:
            entry["source"] = seg.source
            entry["source_offset"] = seg.source_offset
        segments.append(entry)
    doc["segments"] = segments
    return doc


# ---------------------------------------------------------------------------
# dist

def _resolve_operand(raw: str, mode: TokenizationMode, force_literal: bool) -> SymbolSequence:
    if not force_literal and Path(raw).is_file():
        return _read_file(raw, mode)
    return tokenize(raw, mode)


def _cmd_dist(args) -> int:
    mode = _mode(args)
    s1 = _resolve_operand(args.a, mode, args.literal)
    s2 = _resolve_operand(args.b, mode, args.literal)
    score = pairwise_score(s1, s2)
    lev = levenshtein(s1, s2)
    nlev = normalized_levenshtein(s1, s2)
    if args.format == "json":
        doc = {
            "a": args.a,
            "b": args.b,
            "covering_distance": float(score.distance),
            "covering_distance_display": round_half_up(score.distance),
            "covering_similarity": float(score.similarity),
            "covering_similarity_display": round_half_up(score.similarity),
            "directed_similarity_1": float(score.directed_sim_1),
            "directed_similarity_1_display": round_half_up(score.directed_sim_1),
            "directed_similarity_2": float(score.directed_sim_2),
            "directed_similarity_2_display": round_half_up(score.directed_sim_2),
            "levenshtein": lev,
            "normalized_levenshtein": float(nlev),
            "normalized_levenshtein_display": round_half_up(nlev),
        }
        print(json.dumps(doc, indent=2, ensure_ascii=False))
        return EXIT_OK
    print(f"covering distance: {round_half_up(score.distance)}")
    print(f"covering similarity: {round_half_up(score.similarity)}")
    print(f"directed similarity (a|b): {round_half_up(score.directed_sim_1)}")
    print(f"directed similarity (b|a): {round_half_up(score.directed_sim_2)}")
    print(f"levenshtein: {lev}")
    print(f"normalized levenshtein: {round_half_up(nlev)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# matrix

def _cmd_matrix(args) -> int:
    if len(args.inputs) < 2:
        raise UsageError("matrix needs at least 2 inputs")
    mode = _mode(args)
    sequences = [_read_file(path, mode) for path in args.inputs]
    n = len(sequences)
    indexes = [
        SubstringIndex(ReferenceSet((("m", seq),))) if len(seq) else None
        for seq in sequences
    ]
    zero = Fraction(0)
    matrix = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            si, sj = sequences[i], sequences[j]
            if len(si) == 0 or len(sj) == 0:
                d = pairwise_score(si, sj).distance
            else:
                a = covering_similarity(indexes[j], si)
                b = covering_similarity(indexes[i], sj)
                d = 1 - Fraction(1, 2) * (a + b)
            matrix[i][j] = matrix[j][i] = d
    if args.format == "json":
        doc = {
            "inputs": list(args.inputs),
            "distances": [[float(d) for d in row] for row in matrix],
            "distances_display": [[round_half_up(d) for d in row] for row in matrix],
        }
        print(json.dumps(doc, indent=2, ensure_ascii=False))
        return EXIT_OK
    print("inputs:")
    for i, path in enumerate(args.inputs):
        print(f"  [{i}] {path}")
    header = "      " + "".join(f"{f'[{j}]':>8}" for j in range(n))
    print(header)
    for i in range(n):
        cells = "".join(f"{round_half_up(matrix[i][j]):>8}" for j in range(n))
        print(f"{f'[{i}]':>6}{cells}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench

def _parse_sizes(raw: str) -> list[int]:
    try:
        sizes = [int(part) for part in raw.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad size list: {raw!r}") from exc
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def _random_sequence(rng: Random, length: int, alphabet: int) -> SymbolSequence:
    return SymbolSequence(rng.choices(range(alphabet), k=length))


def _time_best(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _cmd_bench(args) -> int:
    if args.backend == "both":
        backends = list(available_backends())
    elif args.backend == "auto":
        backends = [default_backend()]
    else:
        try:
            backends = [automaton_class(args.backend)[1]]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    rng = Random(args.seed)
    refs = ReferenceSet(
        (f"ref{i}", _random_sequence(rng, args.ref_length, args.alphabet))
        for i in range(args.refs_count)
    )
    queries = {size: _random_sequence(rng, size, args.alphabet) for size in args.sizes}
    rows = []
    for backend in backends:
        for size in args.sizes:
            query = queries[size]
            build_s = _time_best(lambda: SubstringIndex(refs, backend=backend), args.repeats)
            index = SubstringIndex(refs, backend=backend)
            cover_s = _time_best(lambda: optimal_covering(index, query), args.repeats)
            cardinality = optimal_covering(index, query).cardinality
            rows.append(
                {
                    "backend": backend,
                    "size": size,
                    "build_seconds": build_s,
                    "cover_seconds": cover_s,
                    "cardinality": cardinality,
                }
            )
    if args.format == "json":
        doc = {
            "seed": args.seed,
            "refs_count": args.refs_count,
            "ref_length": args.ref_length,
            "alphabet": args.alphabet,
            "rows": rows,
        }
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    print(f"refs: {args.refs_count} x {args.ref_length} symbols, alphabet {args.alphabet}, seed {args.seed}")
    print(f"{'backend':<8} {'size':>9} {'build_s':>12} {'cover_s':>12} {'segments':>10}")
    for row in rows:
        print(
            f"{row['backend']:<8} {row['size']:>9} {row['build_seconds']:>12.6f} "
            f"{row['cover_seconds']:>12.6f} {row['cardinality']:>10}"
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry points

def _build_parser() -> _Parser:
    parser = _Parser(prog="seqcover", description=__doc__)
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add_common(p):
        p.add_argument("--mode", choices=[m.value for m in TokenizationMode],
                       default="char", help="tokenization mode (default: char)")
        p.add_argument("--format", choices=["plain", "json"], default="plain",
                       help="output format (default: plain)")

    p_cover = sub.add_parser("cover", help="cover a query file with reference substrings")
    p_cover.add_argument("--refs", nargs="+", required=True, metavar="PATH",
                         help="reference files or directories")
    p_cover.add_argument("--query", required=True, metavar="PATH", help="suspect file")
    p_cover.add_argument("--min-highlight", type=int, default=12, metavar="N",
                         help="minimum matched length flagged as lifted (default: 12)")
    p_cover.add_argument("--split-lines", action="store_true",
                         help="treat each line of each reference file as its own member")
    add_common(p_cover)
    p_cover.set_defaults(func=_cmd_cover)

    p_dist = sub.add_parser("dist", help="pairwise distance between two strings or files")
    p_dist.add_argument("a")
    p_dist.add_argument("b")
    p_dist.add_argument("--literal", action="store_true",
                        help="treat operands as literal text even if a file exists")
    add_common(p_dist)
    p_dist.set_defaults(func=_cmd_dist)

    p_matrix = sub.add_parser("matrix", help="pairwise distance matrix over input files")
    p_matrix.add_argument("inputs", nargs="+", metavar="PATH")
    add_common(p_matrix)
    p_matrix.set_defaults(func=_cmd_matrix)

    p_bench = sub.add_parser("bench", help="time index build and covering on random data")
    p_bench.add_argument("--sizes", type=_parse_sizes, required=True, metavar="N,N,...",
                         help="query sizes, comma separated")
    p_bench.add_argument("--refs-count", type=int, default=10, metavar="K")
    p_bench.add_argument("--ref-length", type=int, default=256, metavar="N")
    p_bench.add_argument("--alphabet", type=int, default=4, metavar="V")
    p_bench.add_argument("--seed", type=int, default=0, metavar="S")
    p_bench.add_argument("--repeats", type=int, default=3, metavar="R")
    p_bench.add_argument("--backend", choices=["auto", "both", "c", "python"], default="auto")
    p_bench.add_argument("--format", choices=["plain", "json"], default="plain")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not hasattr(args, "func"):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UnicodeDecodeError as exc:
        # before ValueError, which it subclasses
        print(f"seqcover: encoding error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ValueError) as exc:
        # ValueError surfaces bad runtime configuration such as an unknown
        # SEQCOVER_BACKEND value
        print(f"seqcover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"seqcover: {exc}", file=sys.stderr)
        return EXIT_IO


def run() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
