"""Shared fixtures and independent reference implementations.

The oracles here deliberately avoid the package's index machinery: they
enumerate substrings into a plain set and run a shortest-path DP, so a bug
in the automaton cannot hide in the expectation.
"""

import random

import pytest

from seqcover.backend import available_backends


@pytest.fixture(params=available_backends())
def backend(request):
    return request.param


def all_substrings(texts):
    subs = set()
    for text in texts:
        for i in range(len(text)):
            for j in range(i + 1, len(text) + 1):
                subs.add(text[i:j])
    return subs


def brute_min_cover(ref_strings, query):
    """Minimal full-covering cardinality by explicit DP over a substring set."""
    subs = all_substrings(ref_strings)
    n = len(query)
    infinity = n + 1
    dist = [0] + [infinity] * n
    for i in range(n):
        if dist[i] >= infinity:
            continue
        for j in range(i + 1, n + 1):
            piece = query[i:j]
            if (len(piece) == 1 or piece in subs) and dist[i] + 1 < dist[j]:
                dist[j] = dist[i] + 1
    return dist[n]


def brute_longest_match(ref_strings, query, start):
    """Length of the longest query prefix from `start` occurring in any reference."""
    best = 0
    for ref in ref_strings:
        for p in range(len(ref)):
            length = 0
            while (start + length < len(query) and p + length < len(ref)
                   and ref[p + length] == query[start + length]):
                length += 1
            best = max(best, length)
    return best


def random_string(rng: random.Random, max_len: int, alphabet: str = "abcd",
                  min_len: int = 0) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))
