# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled suffix-automaton kernel; interface mirrors automaton.SuffixAutomaton."""

from cython.operator cimport dereference as deref
from libc.stdint cimport int64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

from array import array

ctypedef int64_t i64
ctypedef unordered_map[i64, i64] transmap


cdef class SuffixAutomaton:
    cdef vector[transmap] _trans
    cdef vector[i64] _link
    cdef vector[i64] _length
    cdef vector[i64] _end
    cdef i64 _last

    def __init__(self, symbols=()):
        cdef const i64[:] view = _as_i64(symbols)
        cdef i64 pos
        self._trans.resize(1)
        self._link.push_back(-1)
        self._length.push_back(0)
        self._end.push_back(-1)
        self._last = 0
        for pos in range(view.shape[0]):
            self._extend(view[pos], pos)

    cdef void _extend(self, i64 ch, i64 pos):
        cdef i64 cur, p, q, clone
        cdef transmap qcopy
        cdef transmap.iterator it
        cur = <i64> self._length.size()
        self._length.push_back(self._length[self._last] + 1)
        self._link.push_back(-1)
        self._end.push_back(pos + 1)
        self._trans.resize(self._trans.size() + 1)
        p = self._last
        while p != -1:
            it = self._trans[p].find(ch)
            if it != self._trans[p].end():
                break
            self._trans[p][ch] = cur
            p = self._link[p]
        if p == -1:
            self._link[cur] = 0
        else:
            q = deref(it).second
            if self._length[p] + 1 == self._length[q]:
                self._link[cur] = q
            else:
                clone = <i64> self._length.size()
                self._length.push_back(self._length[p] + 1)
                self._link.push_back(self._link[q])
                # any end position of q is also an end position of its clone
                self._end.push_back(self._end[q])
                qcopy = self._trans[q]
                self._trans.push_back(qcopy)
                while p != -1:
                    it = self._trans[p].find(ch)
                    if it == self._trans[p].end() or deref(it).second != q:
                        break
                    self._trans[p][ch] = clone
                    p = self._link[p]
                self._link[q] = clone
                self._link[cur] = clone
        self._last = cur

    @property
    def state_count(self):
        return <i64> self._length.size()

    def match_from(self, ids, start):
        cdef const i64[:] view = _as_i64(ids)
        cdef i64 n = view.shape[0]
        cdef i64 state = 0, j = start
        cdef transmap.iterator it
        while j < n:
            it = self._trans[state].find(view[j])
            if it == self._trans[state].end():
                break
            state = deref(it).second
            j += 1
        if j == start:
            return 0, -1
        return j - start, self._end[state]

    def cover(self, ids):
        cdef const i64[:] view = _as_i64(ids)
        cdef i64 n = view.shape[0]
        cdef i64 i = 0, j, state
        cdef transmap.iterator it
        out = []
        while i < n:
            state = 0
            j = i
            while j < n:
                it = self._trans[state].find(view[j])
                if it == self._trans[state].end():
                    break
                state = deref(it).second
                j += 1
            if j == i:
                out.append((0, -1))
                i += 1
            else:
                out.append((j - i, self._end[state]))
                i = j
        return out


cdef const i64[:] _as_i64(symbols):
    if isinstance(symbols, array) and symbols.typecode == "q":
        return symbols
    return array("q", symbols)
