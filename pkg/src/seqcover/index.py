"""Immutable substring index over a reference set.

Answers "longest prefix of s[start:] that is a contiguous substring of
some reference" in amortized constant time per consumed symbol. Built as a
suffix automaton over the concatenation of all members, separated by
per-member sentinel ids that lie outside the symbol universe, so no query
can ever match across a member boundary.
"""

from __future__ import annotations

from array import array
from bisect import bisect_right

from .backend import COMPILED, automaton_class
from .core import ReferenceSet, SymbolSequence

_UNKNOWN = -1  # encode() placeholder, remapped per index to an unused id


class SubstringIndex:
    """Read-only query structure; safe for unlimited concurrent readers."""

    __slots__ = ("_source", "_backend", "_vocab", "_unknown_id", "_automaton",
                 "_member_starts", "_member_ids")

    def __init__(self, refs: ReferenceSet, backend: str | None = None):
        self._source = refs
        vocab: dict = {}
        for _, seq in refs:
            for sym in seq:
                if sym not in vocab:
                    vocab[sym] = len(vocab)
        self._vocab = vocab

        # concatenation: member ids, then that member's sentinel (vocab-size
        # onward, one per member, never produced by encoding)
        concat: list[int] = []
        starts: list[int] = []
        next_sentinel = len(vocab)
        for _, seq in refs:
            starts.append(len(concat))
            concat.extend(vocab[sym] for sym in seq)
            concat.append(next_sentinel)
            next_sentinel += 1
        self._unknown_id = next_sentinel
        self._member_starts = starts
        self._member_ids = refs.identifiers()

        cls, name = automaton_class(backend)
        self._backend = name
        data = array("q", concat) if name == COMPILED else concat
        self._automaton = cls(data)

    @property
    def source(self) -> ReferenceSet:
        return self._source

    @property
    def backend(self) -> str:
        return self._backend

    @property
    def state_count(self) -> int:
        return self._automaton.state_count

    def encode(self, seq: SymbolSequence) -> list[int] | array:
        """Map symbols to automaton ids; unseen symbols get a dead id."""
        get = self._vocab.get
        unk = self._unknown_id
        ids = [get(sym, unk) for sym in seq]
        if self._backend == COMPILED:
            return array("q", ids)
        return ids

    def contains(self, seq: SymbolSequence) -> bool:
        """True iff seq is a contiguous substring of at least one member.

        The empty sequence is a substring of everything, so contains(empty)
        is always true, even for an empty reference set.
        """
        if len(seq) == 0:
            return True
        ids = self.encode(seq)
        length, _ = self._automaton.match_from(ids, 0)
        return length == len(seq)

    def longest_match_from(self, seq: SymbolSequence, start: int) -> int:
        """Largest L such that seq[start:start+L] is a substring of a member.

        Returns 0 when even the single symbol at start occurs in no member.
        """
        if not (0 <= start < len(seq)):
            raise IndexError(f"start {start} out of range for length {len(seq)}")
        length, _ = self._automaton.match_from(self.encode(seq), start)
        return length

    def cover_raw(self, seq: SymbolSequence) -> list[tuple[int, str | None, int | None]]:
        """Greedy pass over the whole query in one kernel call.

        Yields (length, source_id, source_offset) per segment in covering
        order; fallback positions come back as (1, None, None).
        """
        raw = self._automaton.cover(self.encode(seq))
        out = []
        for length, end in raw:
            if length == 0:
                out.append((1, None, None))
            else:
                member_idx = bisect_right(self._member_starts, end - length) - 1
                offset = end - length - self._member_starts[member_idx]
                out.append((length, self._member_ids[member_idx], offset))
        return out


def build(refs: ReferenceSet, backend: str | None = None) -> SubstringIndex:
    """Build an index; an empty reference set yields one that matches nothing."""
    return SubstringIndex(refs, backend=backend)
