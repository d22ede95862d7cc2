"""Sequences, tokenization, reference sets and coverings.

Everything here is immutable after construction and safe to share between
threads. A symbol is any hashable token with exact equality semantics: a
byte value, a single character, a word or a whole line, depending on the
tokenization mode.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

Symbol = Hashable


class TokenizationMode(enum.Enum):
    BYTE = "byte"
    CHAR = "char"
    WORD = "word"
    LINE = "line"

    @property
    def joiner(self) -> str:
        """Canonical separator used when rendering a sequence back to text."""
        return {"byte": "", "char": "", "word": " ", "line": "\n"}[self.value]


class SymbolSequence:
    """Immutable ordered sequence of symbols; the empty sequence is valid."""

    __slots__ = ("_symbols", "_hash")

    def __init__(self, symbols: Iterable[Symbol] = ()):
        self._symbols = tuple(symbols)
        self._hash: int | None = None

    @property
    def symbols(self) -> tuple[Symbol, ...]:
        return self._symbols

    def __len__(self) -> int:
        return len(self._symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return SymbolSequence(self._symbols[item])
        return self._symbols[item]

    def slice(self, start: int, end: int) -> SymbolSequence:
        """Contiguous subrange [start, end); end == start yields the empty sequence."""
        if not (0 <= start <= end <= len(self._symbols)):
            raise IndexError(
                f"slice [{start}:{end}) out of range for length {len(self._symbols)}"
            )
        return SymbolSequence(self._symbols[start:end])

    def __add__(self, other: SymbolSequence) -> SymbolSequence:
        if not isinstance(other, SymbolSequence):
            return NotImplemented
        return SymbolSequence(self._symbols + other._symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolSequence):
            return NotImplemented
        return self._symbols == other._symbols

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._symbols)
        return self._hash

    def __repr__(self) -> str:
        if len(self._symbols) > 12:
            shown = ", ".join(repr(s) for s in self._symbols[:12])
            return f"SymbolSequence([{shown}, ...], length={len(self._symbols)})"
        return f"SymbolSequence({list(self._symbols)!r})"


EMPTY = SymbolSequence()


def tokenize(text: str | bytes, mode: TokenizationMode) -> SymbolSequence:
    """Split text into a symbol sequence under the given mode.

    BYTE yields individual byte values (str input is encoded as UTF-8),
    CHAR yields Unicode scalars, WORD splits on maximal whitespace runs and
    discards the whitespace, LINE splits on line breaks. Byte input for a
    text mode must decode as UTF-8.
    """
    if mode is TokenizationMode.BYTE:
        data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
        return SymbolSequence(data)
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if mode is TokenizationMode.CHAR:
        return SymbolSequence(text)
    if mode is TokenizationMode.WORD:
        return SymbolSequence(text.split())
    if mode is TokenizationMode.LINE:
        return SymbolSequence(text.splitlines())
    raise ValueError(f"unknown tokenization mode: {mode!r}")


def render(seq: SymbolSequence, mode: TokenizationMode) -> str:
    """Inverse of tokenize up to the mode's canonical joiner.

    Exact round-trip for BYTE and CHAR; WORD and LINE reproduce the text in
    canonical form (single separator between tokens). Byte sequences render
    via Latin-1 so every value 0-255 stays representable.
    """
    if mode is TokenizationMode.BYTE:
        return bytes(seq.symbols).decode("latin-1")
    return mode.joiner.join(seq.symbols)


class ReferenceSet:
    """Named collection of sequences; identifiers must be unique. May be empty."""

    __slots__ = ("_members",)

    def __init__(self, members: Iterable[tuple[str, SymbolSequence]] = ()):
        members = tuple(members)
        seen = set()
        for identifier, _ in members:
            if identifier in seen:
                raise ValueError(f"duplicate reference identifier: {identifier!r}")
            seen.add(identifier)
        self._members = members

    @classmethod
    def of(cls, *sequences: SymbolSequence) -> ReferenceSet:
        """Build a set with generated identifiers ref1, ref2, ..."""
        return cls((f"ref{i + 1}", seq) for i, seq in enumerate(sequences))

    @property
    def members(self) -> tuple[tuple[str, SymbolSequence], ...]:
        return self._members

    def identifiers(self) -> tuple[str, ...]:
        return tuple(identifier for identifier, _ in self._members)

    def sequences(self) -> tuple[SymbolSequence, ...]:
        return tuple(seq for _, seq in self._members)

    @property
    def total_length(self) -> int:
        return sum(len(seq) for _, seq in self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[tuple[str, SymbolSequence]]:
        return iter(self._members)

    def __repr__(self) -> str:
        return f"ReferenceSet({len(self._members)} members, total_length={self.total_length})"


class SegmentKind(enum.Enum):
    MATCHED = "matched"
    FALLBACK = "fallback"


@dataclass(frozen=True)
class CoveringSegment:
    """One tile of a covering.

    MATCHED segments are substrings of some reference and carry the source
    identifier plus the offset of one occurrence in that reference.
    FALLBACK segments are single symbols admitted even when they occur in
    no reference; they carry no source.
    """

    start: int
    length: int
    kind: SegmentKind
    source_id: str | None = None
    source_offset: int | None = None

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("segment length must be >= 1")
        if self.kind is SegmentKind.FALLBACK and self.length != 1:
            raise ValueError("fallback segments have length 1")

    @property
    def end(self) -> int:
        return self.start + self.length


@dataclass(frozen=True)
class Covering:
    """Ordered segments tiling a query exactly: no gaps, no overlaps."""

    query_length: int
    segments: tuple[CoveringSegment, ...]

    def __post_init__(self):
        pos = 0
        for seg in self.segments:
            if seg.start != pos:
                raise ValueError(f"segment at {seg.start} does not tile (expected {pos})")
            pos = seg.end
        if pos != self.query_length:
            raise ValueError(f"covering ends at {pos}, query length is {self.query_length}")

    @property
    def cardinality(self) -> int:
        return len(self.segments)

    def __iter__(self) -> Iterator[CoveringSegment]:
        return iter(self.segments)
