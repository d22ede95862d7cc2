"""Sequence covering similarity: greedy minimal coverings of a query by
reference substrings, the similarity score they induce, and a pairwise
semimetric distance built from it.
"""

from .backend import available_backends, default_backend
from .core import (
    EMPTY,
    Covering,
    CoveringSegment,
    ReferenceSet,
    SegmentKind,
    SymbolSequence,
    TokenizationMode,
    render,
    tokenize,
)
from .covering import (
    covering_similarity,
    optimal_covering,
    oracle_min_cover,
    round_half_up,
)
from .index import SubstringIndex, build
from .pairwise import (
    PairwiseScore,
    SemimetricReport,
    covering_distance,
    levenshtein,
    normalized_levenshtein,
    pairwise_score,
    semimetric_check,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "Covering",
    "CoveringSegment",
    "PairwiseScore",
    "ReferenceSet",
    "SegmentKind",
    "SemimetricReport",
    "SubstringIndex",
    "SymbolSequence",
    "TokenizationMode",
    "available_backends",
    "build",
    "covering_distance",
    "covering_similarity",
    "default_backend",
    "levenshtein",
    "normalized_levenshtein",
    "optimal_covering",
    "oracle_min_cover",
    "pairwise_score",
    "render",
    "round_half_up",
    "semimetric_check",
    "tokenize",
    "__version__",
]
