"""2-d orthogonal range reporting with integer payload pairs.

A static merge-sort tree: points sorted by x sit at the leaves of a
heap-indexed segment tree and every node stores its points sorted by y.
A closed-rectangle query decomposes the x range into O(lg n) canonical
nodes and bisects each node's y list, so a query costs O(lg^2 n + k) for
k reported points.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right


class Grid:
    def __init__(self, points):
        """points: iterable of (x, y, payload); payload is any hashable pair."""
        pts = sorted(points, key=lambda t: (t[0], t[1]))
        self.size = len(pts)
        self.xs = [p[0] for p in pts]
        self.query_count = 0  # instrumentation
        size_p2 = 1
        while size_p2 < max(self.size, 1):
            size_p2 <<= 1
        self._leaf0 = size_p2
        # heap layout: node 1 is the root, leaves at size_p2 .. 2*size_p2-1
        tree: list[tuple[list[int], list]] = [([], [])] * (2 * size_p2)
        for i, p in enumerate(pts):
            tree[size_p2 + i] = ([p[1]], [p[2]])
        for v in range(size_p2 - 1, 0, -1):
            tree[v] = _merge(tree[2 * v], tree[2 * v + 1])
        self._tree = tree

    def query(self, x_lo: int, x_hi: int, y_lo: int, y_hi: int) -> list:
        """Payloads of all points in [x_lo, x_hi] x [y_lo, y_hi]."""
        self.query_count += 1
        if self.size == 0 or x_lo > x_hi or y_lo > y_hi:
            return []
        lo = bisect_left(self.xs, x_lo)
        hi = bisect_right(self.xs, x_hi)  # half-open index range [lo, hi)
        out: list = []
        tree = self._tree
        l = lo + self._leaf0
        r = hi + self._leaf0
        while l < r:
            if l & 1:
                self._emit(tree[l], y_lo, y_hi, out)
                l += 1
            if r & 1:
                r -= 1
                self._emit(tree[r], y_lo, y_hi, out)
            l >>= 1
            r >>= 1
        return out

    @staticmethod
    def _emit(node, y_lo, y_hi, out) -> None:
        ys, payloads = node
        if not ys:
            return
        a = bisect_left(ys, y_lo)
        b = bisect_right(ys, y_hi)
        out.extend(payloads[a:b])

    def points(self):
        """All (x, y, payload) triples in x order (for serialization)."""
        leaf0 = self._leaf0
        return [
            (self.xs[i], self._tree[leaf0 + i][0][0], self._tree[leaf0 + i][1][0])
            for i in range(self.size)
        ]


def _merge(a, b):
    ay, ap = a
    by, bp = b
    if not ay:
        return b
    if not by:
        return a
    ys = []
    payloads = []
    ia = ib = 0
    while ia < len(ay) and ib < len(by):
        if ay[ia] <= by[ib]:
            ys.append(ay[ia])
            payloads.append(ap[ia])
            ia += 1
        else:
            ys.append(by[ib])
            payloads.append(bp[ib])
            ib += 1
    ys.extend(ay[ia:])
    payloads.extend(ap[ia:])
    ys.extend(by[ib:])
    payloads.extend(bp[ib:])
    return ys, payloads


def build(points) -> Grid:
    return Grid(points)


def query(g: Grid, x_lo: int, x_hi: int, y_lo: int, y_hi: int) -> list:
    return g.query(x_lo, x_hi, y_lo, y_hi)
