"""Suffix array, LCP array and constant-time suffix-pair LCP queries.

Texts are byte strings ordered by numeric byte value; a proper prefix sorts
strictly before any extension of it (no sentinel is appended).  All public
ranks and text positions are 1-indexed.  Construction charges the classical
counter of a ledger with the number of text symbols actually read, which
stays within a small constant times the text length.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .qlcp import QueryLedger

__all__ = [
    "RmqTable",
    "TextIndex",
    "build_suffix_array",
    "build_lcp_array",
    "build_rmq",
    "build_text_index",
    "lcp_suf",
    "naive_lcp",
]


def naive_lcp(u: Sequence, v: Sequence) -> int:
    """Longest common prefix length by linear scan (test/oracle helper)."""
    limit = min(len(u), len(v))
    i = 0
    while i < limit and u[i] == v[i]:
        i += 1
    return i


def build_suffix_array(text: bytes, ledger: QueryLedger | None = None) -> list[int]:
    """Suffix array of `text` as 1-indexed start positions, lexicographic order.

    Prefix-doubling over numpy rank arrays: every text symbol is read exactly
    once (into the initial ranks); subsequent rounds sort derived integer
    ranks only.  O(n log n) time.
    """
    n = len(text)
    if n == 0:
        raise ValueError("text must be non-empty")
    data = np.frombuffer(text, dtype=np.uint8)
    if ledger is not None:
        ledger.charge_classical(n)

    rank = data.astype(np.int64)
    order = np.argsort(rank, kind="stable")
    new_rank = np.empty(n, dtype=np.int64)
    diff = np.empty(n, dtype=bool)
    diff[0] = True
    diff[1:] = rank[order[1:]] != rank[order[:-1]]
    new_rank[order] = np.cumsum(diff) - 1
    rank = new_rank.copy()

    step = 1
    while step < n and rank[order[-1]] != n - 1:
        # Key for the suffix at i is (rank[i], rank[i + step]); missing tail
        # ranks sort first, which is exactly the proper-prefix rule.
        tail = np.full(n, -1, dtype=np.int64)
        tail[: n - step] = rank[step:]
        order = np.lexsort((tail, rank))
        head_sorted = rank[order]
        tail_sorted = tail[order]
        diff[0] = True
        diff[1:] = (head_sorted[1:] != head_sorted[:-1]) | (tail_sorted[1:] != tail_sorted[:-1])
        new_rank[order] = np.cumsum(diff) - 1
        rank = new_rank.copy()
        step <<= 1

    return (order + 1).tolist()


def build_lcp_array(text: bytes, sa: list[int], ledger: QueryLedger | None = None) -> list[int]:
    """LCP lengths of lexicographically adjacent suffixes (Kasai's algorithm).

    Entry k (1-indexed) is the LCP of the suffixes at ranks k and k+1.
    Symbol comparisons are charged as two classical reads each; the total is
    linear in the text length.
    """
    n = len(text)
    if n == 0:
        raise ValueError("text must be non-empty")
    if len(sa) != n:
        raise ValueError("suffix array length does not match text length")

    pos = [p - 1 for p in sa]
    rank_of = [0] * n
    for r, p in enumerate(pos):
        rank_of[p] = r

    lcp = [0] * (n - 1)
    k = 0
    reads = 0
    for p in range(n):
        r = rank_of[p]
        if r == n - 1:
            k = 0
            continue
        q = pos[r + 1]
        while p + k < n and q + k < n:
            reads += 2
            if text[p + k] != text[q + k]:
                break
            k += 1
        lcp[r] = k
        if k:
            k -= 1
    if ledger is not None:
        ledger.charge_classical(reads)
    return lcp


class RmqTable:
    """Sparse table answering min-over-range queries on a fixed array in O(1).

    Query arguments are 1-indexed inclusive entry positions.  The input array
    cannot change after construction.
    """

    def __init__(self, values: Sequence[int]):
        self._size = len(values)
        self._levels: list[list[int]] = []
        if self._size:
            level = np.asarray(values, dtype=np.int64)
            self._levels.append(level.tolist())
            span = 1
            while 2 * span <= self._size:
                level = np.minimum(level[: len(level) - span], level[span:])
                self._levels.append(level.tolist())
                span *= 2

    def __len__(self) -> int:
        return self._size

    def query(self, i: int, j: int) -> int:
        """Minimum of entries i..j inclusive (1-indexed)."""
        if not 1 <= i <= j <= self._size:
            raise ValueError(f"invalid query range [{i}, {j}] for {self._size} entries")
        depth = (j - i + 1).bit_length() - 1
        row = self._levels[depth]
        a = row[i - 1]
        b = row[j - (1 << depth)]
        return a if a < b else b


def build_rmq(lcp: Sequence[int]) -> RmqTable:
    """Range-minimum structure over an LCP array."""
    return RmqTable(lcp)


class TextIndex:
    """Immutable bundle of a text with its suffix array, LCP array and RMQ table.

    Safe for concurrent read access once built; construction is
    single-threaded.
    """

    def __init__(self, text: bytes, sa: list[int], lcp: list[int], rmq: RmqTable):
        self.text = text
        self.sa = sa
        self.lcp = lcp
        self.rmq = rmq
        self.n = len(text)
        self._view = memoryview(text)

    def suffix_position(self, rank: int) -> int:
        """1-indexed text position of the suffix with the given rank."""
        if not 1 <= rank <= self.n:
            raise ValueError(f"rank {rank} out of range [1, {self.n}]")
        return self.sa[rank - 1]

    def suffix_view(self, rank: int) -> memoryview:
        """Zero-copy view of the suffix with the given rank."""
        return self._view[self.suffix_position(rank) - 1:]


def build_text_index(text: bytes, ledger: QueryLedger | None = None) -> TextIndex:
    """Run the full preprocessing pass: suffix array, LCP array, RMQ table."""
    sa = build_suffix_array(text, ledger)
    lcp = build_lcp_array(text, sa, ledger)
    return TextIndex(text, sa, lcp, build_rmq(lcp))


def lcp_suf(index: TextIndex, i: int, j: int) -> int:
    """LCP length of the suffixes at ranks i and j, answered from the RMQ table.

    Charges no symbol reads.  For i == j the full suffix length is returned.
    """
    n = index.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"ranks ({i}, {j}) out of range [1, {n}]")
    if i == j:
        return n - index.sa[i - 1] + 1
    if i > j:
        i, j = j, i
    return index.rmq.query(i, j - 1)
