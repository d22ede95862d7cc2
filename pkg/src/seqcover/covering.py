"""Greedy optimal covering and the covering similarity.

The similarity between a non-empty sequence s and a reference set S is

    (|s| - k + 1) / |s|

where k is the minimal number of segments needed to tile s using
contiguous substrings of members of S plus single-symbol fallbacks. The
greedy leftmost-longest pass produces such a minimal covering; optimal
coverings are not unique, but their cardinality is, and the greedy output
is this library's canonical segmentation. Values are exact fractions:
1 for a sequence that is itself a reference substring, down to 1/|s| when
only fallbacks apply. The empty sequence has similarity 1 by convention.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from .core import Covering, CoveringSegment, ReferenceSet, SegmentKind, SymbolSequence
from .index import SubstringIndex

SimilarityValue = Fraction


def optimal_covering(index: SubstringIndex, seq: SymbolSequence) -> Covering:
    """Minimal-cardinality full covering of a non-empty seq (greedy, canonical)."""
    if len(seq) == 0:
        raise ValueError("cannot cover the empty sequence")
    segments = []
    pos = 0
    for length, source_id, source_offset in index.cover_raw(seq):
        kind = SegmentKind.MATCHED if source_id is not None else SegmentKind.FALLBACK
        segments.append(CoveringSegment(pos, length, kind, source_id, source_offset))
        pos += length
    return Covering(query_length=len(seq), segments=tuple(segments))


def covering_similarity(
    refs: ReferenceSet | SubstringIndex, seq: SymbolSequence
) -> Fraction:
    """Similarity of seq against a reference set (or a prebuilt index).

    Empty seq yields 1; an empty reference set leaves only single-symbol
    fallbacks, yielding 1/|seq|.
    """
    if len(seq) == 0:
        return Fraction(1)
    index = refs if isinstance(refs, SubstringIndex) else SubstringIndex(refs)
    k = optimal_covering(index, seq).cardinality
    return Fraction(len(seq) - k + 1, len(seq))


def oracle_min_cover(refs: ReferenceSet, seq: SymbolSequence) -> int:
    """Minimal covering cardinality by dynamic programming over positions.

    Independent verifier for the greedy engine: membership is decided by
    naive scanning of the reference sequences, never through a
    SubstringIndex. Intended for short sequences (quadratic in |seq|).
    """
    if len(seq) == 0:
        raise ValueError("cannot cover the empty sequence")
    query = seq.symbols
    members = [ref.symbols for _, ref in refs]
    n = len(query)

    # a prefix of a reference substring is itself a reference substring, so
    # one naive maximal-match length per start position decides every slice
    reach = [_naive_longest_match(members, query, i) for i in range(n)]

    inf = n + 1
    dist = [0] + [inf] * n
    for i in range(n):
        if dist[i] >= inf:
            continue
        step = dist[i] + 1
        for j in range(i + 1, i + max(reach[i], 1) + 1):
            if step < dist[j]:
                dist[j] = step
    return dist[n]


def _naive_longest_match(members, query, start: int) -> int:
    n = len(query)
    best = 0
    first = query[start]
    for ref in members:
        m = len(ref)
        for p in range(m):
            if ref[p] != first:
                continue
            length = 1
            while (start + length < n and p + length < m
                   and ref[p + length] == query[start + length]):
                length += 1
            if length > best:
                best = length
    return best


def round_half_up(value: Fraction | int, places: int = 3) -> str:
    """Decimal display string with exact half-up rounding (e.g. 11/56 -> '0.196')."""
    value = Fraction(value)
    quantum = Decimal(1).scaleb(-places)
    return str(
        (Decimal(value.numerator) / Decimal(value.denominator)).quantize(
            quantum, rounding=ROUND_HALF_UP
        )
    )
