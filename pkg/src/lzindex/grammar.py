"""Balanced straight-line program over a capped LZ77 parse.

The text is carved into fixed-length blocks and each block gets its own
AVL-balanced binary grammar; nodes are shared freely across blocks. A block
table of running prefix fingerprints then gives substring extraction in
O(lg(block) + length) node visits and substring fingerprints in O(lg(block)).
"""

from __future__ import annotations

from . import fingerprints as fp
from ._text import to_symbols
from .lz77 import Lz77Parse


class _Arena:
    """Append-only node store. Terminals carry a symbol; pairs carry children.

    Every node knows its expansion length, AVL height (terminal = 1) and the
    fingerprint value of its expansion.
    """

    def __init__(self, fn: fp.FpFunction):
        self.fn = fn
        self.sym: list[int] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.length: list[int] = []
        self.height: list[int] = []
        self.fpv: list[int] = []
        self._terminals: dict[int, int] = {}

    def terminal(self, symbol: int) -> int:
        v = self._terminals.get(symbol)
        if v is None:
            v = self._push(symbol, -1, -1, 1, 1, symbol % self.fn.p)
            self._terminals[symbol] = v
        return v

    def pair(self, a: int, b: int) -> int:
        fn = self.fn
        value = (self.fpv[a] + fn.r_pow(self.length[a]) * self.fpv[b]) % fn.p
        return self._push(
            -1,
            a,
            b,
            self.length[a] + self.length[b],
            max(self.height[a], self.height[b]) + 1,
            value,
        )

    def _push(self, sym, left, right, length, height, fpv) -> int:
        self.sym.append(sym)
        self.left.append(left)
        self.right.append(right)
        self.length.append(length)
        self.height.append(height)
        self.fpv.append(fpv)
        return len(self.sym) - 1

    # -- balanced concatenation ------------------------------------------

    def _node(self, a: int, b: int) -> int:
        """Pair with rebalancing; tolerates a height gap of two."""
        ha, hb = self.height[a], self.height[b]
        if abs(ha - hb) <= 1:
            return self.pair(a, b)
        if ha == hb + 2:
            al, ar = self.left[a], self.right[a]
            if self.height[al] >= self.height[ar]:
                return self.pair(al, self.pair(ar, b))
            arl, arr = self.left[ar], self.right[ar]
            return self.pair(self.pair(al, arl), self.pair(arr, b))
        if hb == ha + 2:
            bl, br = self.left[b], self.right[b]
            if self.height[br] >= self.height[bl]:
                return self.pair(self.pair(a, bl), br)
            bll, blr = self.left[bl], self.right[bl]
            return self.pair(self.pair(a, bll), self.pair(blr, br))
        raise AssertionError("join gap > 2")

    def join(self, a: int, b: int) -> int:
        """AVL join: expansion is expansion(a) + expansion(b)."""
        ha, hb = self.height[a], self.height[b]
        if abs(ha - hb) <= 2:
            return self._node(a, b)
        if ha > hb:
            t = self.join(self.right[a], b)
            return self._node(self.left[a], t)
        t = self.join(a, self.left[b])
        return self._node(t, self.right[b])

    def concat(self, nodes: list[int]) -> int:
        root = nodes[0]
        for v in nodes[1:]:
            root = self.join(root, v)
        return root

    # -- queries ----------------------------------------------------------

    def cover(self, v: int, lo: int, hi: int, out: list[int], counter) -> None:
        """Existing nodes whose expansions concatenate to expansion(v)[lo,hi]."""
        counter[0] += 1
        if lo <= 1 and hi >= self.length[v]:
            out.append(v)
            return
        l = self.left[v]
        ll = self.length[l]
        if hi <= ll:
            self.cover(l, lo, hi, out, counter)
        elif lo > ll:
            self.cover(self.right[v], lo - ll, hi - ll, out, counter)
        else:
            self.cover(l, lo, ll, out, counter)
            self.cover(self.right[v], 1, hi - ll, out, counter)

    def expand(self, v: int, out: list[int], counter) -> None:
        stack = [v]
        while stack:
            u = stack.pop()
            counter[0] += 1
            s = self.sym[u]
            if s >= 0:
                out.append(s)
            else:
                stack.append(self.right[u])
                stack.append(self.left[u])

    def prefix_fp(self, v: int, t: int, counter) -> fp.Fingerprint:
        """Fingerprint of the first t characters of expansion(v)."""
        fn = self.fn
        value = 0
        done = 0
        while t > 0:
            counter[0] += 1
            if t == self.length[v]:
                value = (value + fn.r_pow(done) * self.fpv[v]) % fn.p
                done += t
                t = 0
                break
            l = self.left[v]
            ll = self.length[l]
            if t <= ll:
                v = l
            else:
                value = (value + fn.r_pow(done) * self.fpv[l]) % fn.p
                done += ll
                t -= ll
                v = self.right[v]
        return fp.Fingerprint(value, done, fn)


class BlockTable:
    """Per-block grammar roots plus running prefix fingerprints."""

    def __init__(self, arena: _Arena, n: int, block_len: int, roots: list[int], cum_fp: list[fp.Fingerprint]):
        self.arena = arena
        self.fn = arena.fn
        self.n = n
        self.block_len = block_len
        self.roots = roots
        self.cum_fp = cum_fp  # cum_fp[k] = phi(text[1, end of block k]); cum_fp[0] = phi("")
        self.node_visits = 0  # instrumentation, cumulative over queries

    @property
    def node_count(self) -> int:
        return len(self.arena.sym)

    def block_heights(self) -> list[int]:
        return [self.arena.height[r] for r in self.roots]

    def _check_range(self, i: int, j: int) -> None:
        if i < 1 or j > self.n or i > j + 1:
            raise ValueError("range out of bounds")

    def extract(self, i: int, j: int) -> list[int]:
        """text[i, j] as a list of symbols (1-based inclusive; empty if i > j)."""
        self._check_range(i, j)
        if i > j:
            return []
        out: list[int] = []
        counter = [0]
        arena = self.arena
        b = self.block_len
        k = (i - 1) // b
        while k * b < j:
            root = self.roots[k]
            lo = max(i - k * b, 1)
            hi = min(j - k * b, arena.length[root])
            pieces: list[int] = []
            arena.cover(root, lo, hi, pieces, counter)
            for v in pieces:
                arena.expand(v, out, counter)
            k += 1
        self.node_visits += counter[0]
        return out

    def substring_fp(self, i: int, j: int) -> fp.Fingerprint:
        """phi(text[i, j]) touching O(lg block_len) nodes."""
        self._check_range(i, j)
        if i > j:
            return fp.empty_fp(self.fn)
        counter = [0]
        arena = self.arena
        b = self.block_len
        k1 = (i - 1) // b
        k2 = (j - 1) // b
        if k1 == k2:
            root = self.roots[k1]
            hi = self.arena.prefix_fp(root, j - k1 * b, counter)
            lo = self.arena.prefix_fp(root, i - 1 - k1 * b, counter)
            result = fp.split_suffix(hi, lo)
        else:
            r1 = self.roots[k1]
            head = fp.split_suffix(
                fp.Fingerprint(arena.fpv[r1], arena.length[r1], self.fn),
                arena.prefix_fp(r1, i - 1 - k1 * b, counter),
            )
            mid = fp.split_suffix(self.cum_fp[k2], self.cum_fp[k1 + 1])
            tail = arena.prefix_fp(self.roots[k2], j - k2 * b, counter)
            result = fp.compose(fp.compose(head, mid), tail)
        self.node_visits += counter[0]
        return result


def build_slp(parse: Lz77Parse, fn: fp.FpFunction, block_len: int | None = None) -> BlockTable:
    """Build the per-block balanced grammar for the text the parse produces.

    Every phrase must fit inside `block_len` positions (default: ceil(n/z) of
    the given parse); sources copy node covers from already-built blocks, with
    self-overlapping sources handled by doubling the available periodic part.
    """
    n = parse.n
    if block_len is None:
        block_len = max(1, -(-n // parse.z))
    if any(ph.span() > block_len for ph in parse.phrases):
        raise ValueError("phrase exceeds block length")

    arena = _Arena(fn)
    counter = [0]
    completed: list[int] = []
    cur: int | None = None
    cur_len = 0
    produced = 0  # characters generated so far

    def cover_global(a: int, b: int) -> list[int]:
        # a, b are 1-based text positions, b <= produced
        pieces: list[int] = []
        k = (a - 1) // block_len
        while k * block_len < b:
            root = completed[k] if k < len(completed) else cur
            lo = max(a - k * block_len, 1)
            hi = min(b - k * block_len, arena.length[root])
            arena.cover(root, lo, hi, pieces, counter)
            k += 1
        return pieces

    def take(g: int, lo: int, hi: int) -> int:
        pieces: list[int] = []
        arena.cover(g, lo, hi, pieces, counter)
        return arena.concat(pieces)

    def push(g: int) -> None:
        nonlocal cur, cur_len, completed
        span = arena.length[g]
        if cur_len + span > block_len:
            head = block_len - cur_len
            left = take(g, 1, head)
            right = take(g, head + 1, span)
            completed.append(arena.join(cur, left) if cur is not None else left)
            cur, cur_len = right, span - head
        else:
            cur = g if cur is None else arena.join(cur, g)
            cur_len += span
        if cur_len == block_len:
            completed.append(cur)
            cur, cur_len = None, 0

    for ph in parse.phrases:
        pos = produced + 1
        if ph.len == 0:
            g = arena.terminal(ph.border)
        else:
            avail = pos - ph.start
            if ph.len <= avail:
                g = arena.concat(cover_global(ph.start, ph.start + ph.len - 1))
            else:
                g = arena.concat(cover_global(ph.start, pos - 1))
                covered = avail
                while covered < ph.len:
                    g = arena.join(g, g)
                    covered <<= 1
                g = take(g, 1, ph.len)
            g = arena.join(g, arena.terminal(ph.border))
        push(g)
        produced += ph.span()

    if cur is not None:
        completed.append(cur)

    cum = [fp.empty_fp(fn)]
    for root in completed:
        cum.append(fp.compose(cum[-1], fp.Fingerprint(arena.fpv[root], arena.length[root], fn)))
    return BlockTable(arena, n, block_len, completed, cum)


def extract(bt: BlockTable, i: int, j: int) -> list[int]:
    return bt.extract(i, j)


def substring_fp(bt: BlockTable, i: int, j: int) -> fp.Fingerprint:
    return bt.substring_fp(i, j)
