"""Pure-Python suffix automaton over integer-encoded symbols.

This is the fallback kernel; `_automaton_c` is the compiled twin with the
same interface. The automaton is built once over the concatenation of all
reference sequences (separated by out-of-band sentinel ids) and then
answers longest-extension queries by walking transitions from the root,
one hash lookup per consumed symbol.
"""

from __future__ import annotations

from typing import Sequence


class SuffixAutomaton:
    """Online suffix-automaton construction (last/link/clone scheme).

    `symbols` is the reference concatenation as non-negative int ids.
    Query ids absent from the build alphabet simply find no transition.
    Each state keeps the end offset of one occurrence of its strings, so a
    match can be located back in the concatenation.
    """

    __slots__ = ("_trans", "_link", "_length", "_end", "_last")

    def __init__(self, symbols: Sequence[int] = ()):
        self._trans: list[dict[int, int]] = [{}]
        self._link = [-1]
        self._length = [0]
        self._end = [-1]
        self._last = 0
        for pos, sym in enumerate(symbols):
            self._extend(sym, pos)

    def _extend(self, ch: int, pos: int) -> None:
        trans, link, length = self._trans, self._link, self._length
        cur = len(length)
        length.append(length[self._last] + 1)
        link.append(-1)
        self._end.append(pos + 1)
        trans.append({})
        p = self._last
        while p != -1 and ch not in trans[p]:
            trans[p][ch] = cur
            p = link[p]
        if p == -1:
            link[cur] = 0
        else:
            q = trans[p][ch]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                # any end position of q is also an end position of its clone
                self._end.append(self._end[q])
                trans.append(dict(trans[q]))
                while p != -1 and trans[p].get(ch) == q:
                    trans[p][ch] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        self._last = cur

    @property
    def state_count(self) -> int:
        return len(self._length)

    def match_from(self, ids: Sequence[int], start: int) -> tuple[int, int]:
        """Longest prefix of ids[start:] present in the automaton.

        Returns (length, end) where end is the exclusive end offset of one
        occurrence in the build concatenation, or (0, -1) when not even one
        symbol matches.
        """
        trans = self._trans
        n = len(ids)
        state = 0
        state_map = trans[0]
        j = start
        while j < n:
            nxt = state_map.get(ids[j])
            if nxt is None:
                break
            state = nxt
            state_map = trans[nxt]
            j += 1
        if j == start:
            return 0, -1
        return j - start, self._end[state]

    def cover(self, ids: Sequence[int]) -> list[tuple[int, int]]:
        """Greedy left-to-right pass: longest match at each position.

        Returns one (length, end) pair per covering segment, in order;
        (0, -1) marks a position where the single symbol occurs in no
        reference and must be admitted as a fallback. Total work is one
        transition lookup per consumed symbol plus one failed lookup per
        segment, independent of how many references were indexed.
        """
        trans = self._trans
        end = self._end
        root = trans[0]
        out: list[tuple[int, int]] = []
        append = out.append
        i = 0
        n = len(ids)
        while i < n:
            state = 0
            state_map = root
            j = i
            while j < n:
                nxt = state_map.get(ids[j])
                if nxt is None:
                    break
                state = nxt
                state_map = trans[nxt]
                j += 1
            if j == i:
                append((0, -1))
                i += 1
            else:
                append((j - i, end[state]))
                i = j
        return out
