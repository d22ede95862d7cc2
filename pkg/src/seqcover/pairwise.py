"""Pairwise covering similarity and distance, plus the edit-distance baseline.

The pairwise similarity of two non-empty sequences averages the two
directed coverings (each sequence covered by substrings of the other);
distance is one minus that. The result is a semimetric: non-negative,
symmetric, zero exactly on equal pairs. It does not promise the triangle
inequality, and semimetric_check reports any violating triples it finds.

Empty-sequence conventions are asymmetric by design: a directed similarity
against a reference set uses the 1/|s| floor, while the pairwise form
against the empty sequence is defined directly as (1 + 1/(|s|+1)) / 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .core import Covering, ReferenceSet, SymbolSequence
from .covering import covering_similarity, optimal_covering
from .index import SubstringIndex


@dataclass(frozen=True)
class PairwiseScore:
    """Symmetric similarity/distance plus the two directed coverings behind them."""

    similarity: Fraction
    distance: Fraction
    directed_sim_1: Fraction
    directed_sim_2: Fraction
    covering_1_in_2: Covering | None
    covering_2_in_1: Covering | None


def pairwise_score(
    s1: SymbolSequence, s2: SymbolSequence, backend: str | None = None
) -> PairwiseScore:
    """Score a pair of sequences; either side may be empty.

    For two non-empty sequences, similarity is the mean of the directed
    covering similarities and each covering is reported. Distance is
    exactly 1 - similarity.
    """
    n1, n2 = len(s1), len(s2)
    if n1 == 0 and n2 == 0:
        one = Fraction(1)
        empty = Covering(query_length=0, segments=())
        return PairwiseScore(one, Fraction(0), one, one, empty, empty)
    if n1 == 0 or n2 == 0:
        n = max(n1, n2)
        tail = Fraction(1, n + 1)
        sim = Fraction(1, 2) * (1 + tail)
        d1 = Fraction(1) if n1 == 0 else tail
        d2 = Fraction(1) if n2 == 0 else tail
        return PairwiseScore(sim, 1 - sim, d1, d2, None, None)

    index2 = SubstringIndex(ReferenceSet((("s2", s2),)), backend=backend)
    index1 = SubstringIndex(ReferenceSet((("s1", s1),)), backend=backend)
    cover1 = optimal_covering(index2, s1)
    cover2 = optimal_covering(index1, s2)
    d1 = Fraction(n1 - cover1.cardinality + 1, n1)
    d2 = Fraction(n2 - cover2.cardinality + 1, n2)
    sim = Fraction(1, 2) * (d1 + d2)
    return PairwiseScore(sim, 1 - sim, d1, d2, cover1, cover2)


def covering_distance(
    s1: SymbolSequence, s2: SymbolSequence, backend: str | None = None
) -> Fraction:
    return pairwise_score(s1, s2, backend=backend).distance


def levenshtein(s1: SymbolSequence, s2: SymbolSequence) -> int:
    """Unit-cost edit distance (insert, delete, substitute)."""
    a, b = s1.symbols, s2.symbols
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    previous = list(range(len(b) + 1))
    for i, sym_a in enumerate(a, start=1):
        current = [i]
        append = current.append
        for j, sym_b in enumerate(b, start=1):
            if sym_a == sym_b:
                append(previous[j - 1])
            else:
                append(1 + min(previous[j - 1], previous[j], current[j - 1]))
        previous = current
    return previous[-1]


def normalized_levenshtein(s1: SymbolSequence, s2: SymbolSequence) -> Fraction:
    """Edit distance divided by the summed lengths; 0 for two empty sequences."""
    total = len(s1) + len(s2)
    if total == 0:
        return Fraction(0)
    return Fraction(levenshtein(s1, s2), total)


@dataclass
class SemimetricReport:
    """Outcome of checking the distance axioms over a sample of sequences."""

    sample_count: int
    pair_count: int
    axiom_violations: list[str] = field(default_factory=list)
    triangle_violations: list[tuple[int, int, int, Fraction]] = field(default_factory=list)

    @property
    def axioms_hold(self) -> bool:
        return not self.axiom_violations


def semimetric_check(samples: list[SymbolSequence]) -> SemimetricReport:
    """Exhaustively verify non-negativity, symmetry and identity of
    indiscernibles over all pairs in samples.

    Triangle-inequality violations are collected informationally: the
    distance is a semimetric, so finding some is legitimate. Axiom
    violations are recorded with the witnessing pair.
    """
    report = SemimetricReport(sample_count=len(samples), pair_count=0)
    dist: dict[tuple[int, int], Fraction] = {}
    for i, a in enumerate(samples):
        for j, b in enumerate(samples):
            if j < i:
                continue
            report.pair_count += 1
            d_ab = pairwise_score(a, b).distance
            d_ba = pairwise_score(b, a).distance
            dist[(i, j)] = dist[(j, i)] = d_ab
            if d_ab < 0:
                report.axiom_violations.append(f"negative distance {d_ab} for ({a!r}, {b!r})")
            if d_ab != d_ba:
                report.axiom_violations.append(f"asymmetry {d_ab} != {d_ba} for ({a!r}, {b!r})")
            if (d_ab == 0) != (a == b):
                report.axiom_violations.append(
                    f"identity of indiscernibles fails for ({a!r}, {b!r}): distance {d_ab}"
                )
    for i, j, k in itertools.combinations(range(len(samples)), 3):
        for x, y, z in ((i, j, k), (j, i, k), (i, k, j)):
            excess = dist[(x, y)] + dist[(y, z)] - dist[(x, z)]
            if excess < 0:
                report.triangle_violations.append((x, z, y, -excess))
    return report
