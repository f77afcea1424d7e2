"""Suffix array machinery shared by the LZ77 parser and the index builder.

Everything here treats the text as a numpy int array and end-of-string as
smaller than any symbol, so suffix order matches Python's prefix-first
ordering of the raw sequences.
"""

from __future__ import annotations

import numpy as np


def suffix_array(text: np.ndarray) -> np.ndarray:
    """Suffix array by prefix doubling (numpy lexsort), O(n lg n) rounds."""
    n = len(text)
    rank = np.array(text, dtype=np.int64)  # copy: the doubling loop writes ranks
    sa = np.argsort(rank, kind="stable")
    tmp = np.empty(n, dtype=np.int64)
    k = 1
    while k < n:
        # rank of the suffix starting k later; -1 past the end (sorts first)
        second = np.full(n, -1, dtype=np.int64)
        second[: n - k] = rank[k:]
        sa = np.lexsort((second, rank))
        tmp[sa[0]] = 0
        prev = sa[:-1]
        cur = sa[1:]
        bump = (rank[cur] != rank[prev]) | (second[cur] != second[prev])
        tmp[cur] = np.cumsum(bump)
        rank, tmp = tmp.copy(), rank
        if rank[sa[-1]] == n - 1:
            break
        k <<= 1
    return sa


def lcp_array(text: np.ndarray, sa: np.ndarray, rank: np.ndarray) -> np.ndarray:
    """Kasai: lcp[i] = lcp(suffix sa[i-1], suffix sa[i]), lcp[0] = 0."""
    n = len(text)
    lcp = np.zeros(n, dtype=np.int64)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and text[i + h] == text[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return lcp


class MinSparseTable:
    """Idempotent range-min over a fixed int array, O(1) queries."""

    def __init__(self, values: np.ndarray):
        n = len(values)
        levels = max(1, n.bit_length())
        table = [np.asarray(values, dtype=np.int64)]
        k = 1
        while (1 << k) <= n:
            prev = table[-1]
            span = 1 << (k - 1)
            table.append(np.minimum(prev[: n - 2 * span + 1], prev[span : n - span + 1]))
            k += 1
        self._table = table

    def query(self, lo: int, hi: int) -> int:
        """Min over values[lo:hi], hi exclusive; lo < hi required."""
        k = (hi - lo).bit_length() - 1
        row = self._table[k]
        return int(min(row[lo], row[hi - (1 << k)]))


class SuffixContext:
    """Suffix array, ranks, lcps and the range-min tables over them."""

    def __init__(self, text: np.ndarray):
        self.n = len(text)
        self.sa = suffix_array(text)
        self.rank = np.empty(self.n, dtype=np.int64)
        self.rank[self.sa] = np.arange(self.n)
        self.lcp = lcp_array(text, self.sa, self.rank)
        self._lcp_rmq = MinSparseTable(self.lcp)
        self._sa_rmq = MinSparseTable(self.sa)

    def lcp_between(self, i: int, j: int) -> int:
        """lcp of the suffixes starting at text positions i and j (0-based)."""
        if i == j:
            return self.n - i
        ri, rj = int(self.rank[i]), int(self.rank[j])
        if ri > rj:
            ri, rj = rj, ri
        return self._lcp_rmq.query(ri + 1, rj + 1)

    def leftmost_occurrence(self, pos: int, length: int) -> int:
        """Smallest start of an occurrence of text[pos:pos+length] (0-based).

        Extends the lcp-interval around rank(pos) to all suffixes sharing a
        prefix of `length` characters and takes the min suffix start there.
        """
        if length == 0:
            return 0
        r = int(self.rank[pos])
        lo = self._bisect_left(r, length)
        hi = self._bisect_right(r, length)
        return self._sa_rmq.query(lo, hi + 1)

    def _bisect_left(self, r: int, length: int) -> int:
        # smallest l <= r with min(lcp[l+1..r]) >= length
        lo, hi = 0, r  # answer in [lo, hi]
        while lo < hi:
            mid = (lo + hi) // 2
            if self._lcp_rmq.query(mid + 1, r + 1) >= length:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def _bisect_right(self, r: int, length: int) -> int:
        lo, hi = r, self.n - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._lcp_rmq.query(r + 1, mid + 1) >= length:
                lo = mid
            else:
                hi = mid - 1
        return lo
