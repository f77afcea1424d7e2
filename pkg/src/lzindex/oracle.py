"""Brute-force reference implementations used to cross-check the index.

These are deliberately naive (direct scans and definitions applied verbatim)
so they stay independent of the structures they validate. Exposed publicly so
downstream users can property-test their own configurations.
"""

from __future__ import annotations

from bisect import bisect_left

from ._text import to_bytes_if_possible, to_symbols
from .lz77 import Lz77Parse, Phrase


def naive_locate(text, pattern) -> list[int]:
    """All 1-based starting positions of `pattern` in `text`, by direct scan."""
    t = to_symbols(text)
    p = to_symbols(pattern)
    m = len(p)
    if m == 0 or m > len(t):
        return []
    tb = to_bytes_if_possible(t)
    pb = to_bytes_if_possible(p)
    out = []
    if tb is not None and pb is not None:
        i = tb.find(pb)
        while i != -1:
            out.append(i + 1)
            i = tb.find(pb, i + 1)
    else:
        tt = tuple(t.tolist())
        pp = tuple(p.tolist())
        for i in range(len(tt) - m + 1):
            if tt[i : i + m] == pp:
                out.append(i + 1)
    return out


def classify(text, parse: Lz77Parse, positions, m: int) -> list[bool]:
    """primary_flags[i] is True iff occurrence [pos, pos+m-1] contains a
    phrase border of the given parse."""
    borders = parse.border_positions()
    flags = []
    for pos in positions:
        i = bisect_left(borders, pos)
        flags.append(i < len(borders) and borders[i] <= pos + m - 1)
    return flags


def naive_lz77(text) -> Lz77Parse:
    """Greedy leftmost-longest LZ77 by quadratic search; smallest source."""
    arr = to_symbols(text)
    n = len(arr)
    if n == 0:
        raise ValueError("empty text")
    sigma = int(arr.max())
    tb = to_bytes_if_possible(arr)
    seq = tb if tb is not None else tuple(arr.tolist())

    def find_before(sub, j0: int) -> int:
        # leftmost occurrence of sub starting at < j0 (0-based), -1 if none
        if tb is not None:
            return seq.find(sub, 0, j0 - 1 + len(sub))
        for i in range(j0):
            if seq[i : i + len(sub)] == sub:
                return i
        return -1

    phrases = []
    j = 0
    while j < n:
        length = 0
        src = -1
        while j + length + 1 <= n - 1:
            cand = find_before(seq[j : j + length + 1], j)
            if cand == -1:
                break
            length += 1
            src = cand
        if length == 0:
            phrases.append(Phrase(0, 0, int(arr[j])))
        else:
            phrases.append(Phrase(src + 1, length, int(arr[j + length])))
        j += length + 1
    return Lz77Parse(tuple(phrases), n, len(phrases), sigma)
