"""Multi-pattern matching by LCP-guided binary search over a suffix array.

Every occurrence of a pattern is a suffix that carries the pattern as a
prefix, and because the suffix array sorts suffixes lexicographically those
suffixes occupy one contiguous rank interval.  Matching a pattern therefore
reduces to two binary searches: one for the smallest rank in the interval,
one for the largest.

The searches are the delicate part.  A plain binary search would re-compare
the pattern from scratch at every midpoint.  Here the search keeps, for both
bracket ranks, the number of pattern symbols already known to match there
(`lo_lcp`, `hi_lcp`).  Each midpoint is first classified against the closer
bracket using the precomputed suffix-pair LCP (a constant-time RMQ lookup
that reads no symbols); only when that lookup is uninformative does the
search call the simulated quantum LCP primitive, and then it resumes past
the already-verified prefix instead of at symbol one.  The two tracked LCPs
never decrease, so the primitive's square-root charges telescope: a whole
search spends O(sqrt(pattern_len * log n) + log n) simulated quantum queries
instead of the naive O(pattern_len * log n) symbol reads.

Getting the three-way midpoint classification wrong produces silently wrong
borders rather than crashes, which is why the search ends by confirming that
the candidate rank really carries the pattern before reporting it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .qlcp import CostModelConfig, QueryLedger, qlcp, qlcp_from
from .suffix_index import TextIndex, build_text_index, lcp_suf

__all__ = [
    "Dictionary",
    "MatchReport",
    "SearchTrace",
    "left_border_search",
    "right_border_search",
    "expand_occurrences",
    "match_all",
]


@dataclass(frozen=True)
class Dictionary:
    """The patterns to locate: a non-empty sequence of non-empty byte strings."""

    patterns: tuple[bytes, ...]

    def __post_init__(self) -> None:
        if not self.patterns:
            raise ValueError("dictionary must contain at least one pattern")
        for k, p in enumerate(self.patterns):
            if len(p) == 0:
                raise ValueError(f"pattern {k + 1} is empty")

    @property
    def m(self) -> int:
        return len(self.patterns)

    @property
    def total_length(self) -> int:
        return sum(len(p) for p in self.patterns)

    @property
    def max_length(self) -> int:
        return max(len(p) for p in self.patterns)


@dataclass
class SearchTrace:
    """Instrumentation hook for one border search (loop count, bracket LCPs)."""

    iterations: int = 0
    lo_lcp_values: list[int] = field(default_factory=list)
    hi_lcp_values: list[int] = field(default_factory=list)


@dataclass
class MatchReport:
    """Per-pattern occurrence lists (1-indexed, ascending) plus query totals."""

    occurrences: list[list[int]]
    per_pattern_quantum_queries: list[int]
    ledger_snapshot: QueryLedger


def _border_search(
    index: TextIndex,
    pattern: bytes,
    rightmost: bool,
    config: CostModelConfig,
    ledger: QueryLedger,
    rng: random.Random | None,
    trace: SearchTrace | None,
) -> int | None:
    plen = len(pattern)
    if plen == 0:
        raise ValueError("pattern must be non-empty")
    n = index.n
    if rng is None:
        rng = random.Random(config.rng_seed)

    first = index.suffix_view(1)
    last = index.suffix_view(n)
    lo_lcp = qlcp(first, pattern, config, ledger, rng).lcp_len
    hi_lcp = qlcp(last, pattern, config, ledger, rng).lcp_len

    # The extreme ranks settle some searches outright: a pattern prefixing
    # the first (last) suffix IS the left (right) border, and a pattern
    # sorting outside [first suffix, last suffix] occurs nowhere.
    if not rightmost and lo_lcp == plen:
        return 1
    if rightmost and hi_lcp == plen:
        return n
    if lo_lcp < plen and lo_lcp < len(first):
        ledger.charge_classical(2)
        if pattern[lo_lcp] < first[lo_lcp]:
            return None
    if hi_lcp < plen:
        if hi_lcp == len(last):
            return None  # last suffix is a proper prefix of the pattern
        ledger.charge_classical(2)
        if pattern[hi_lcp] > last[hi_lcp]:
            return None

    lo, hi = 1, n
    if trace is not None:
        trace.lo_lcp_values.append(lo_lcp)
        trace.hi_lcp_values.append(hi_lcp)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if lo_lcp >= hi_lcp:
            shared = lcp_suf(index, lo, mid)
            if shared > lo_lcp:
                # Mid agrees with lo beyond the point where lo diverges from
                # the pattern (or extends a full match), so mid compares to
                # the pattern exactly as lo does.
                lo = mid
            elif shared == lo_lcp:
                side, mid_lcp = _classify_mid(
                    index, pattern, mid, lo_lcp, rightmost, config, ledger, rng
                )
                if side < 0:
                    lo, lo_lcp = mid, mid_lcp
                else:
                    hi, hi_lcp = mid, mid_lcp
            else:
                # Mid diverges from lo inside the pattern's verified prefix;
                # everything from mid rightwards differs from the pattern at
                # that same position, above it in lexicographic order.
                hi, hi_lcp = mid, shared
        else:
            shared = lcp_suf(index, mid, hi)
            if shared > hi_lcp:
                hi = mid
            elif shared == hi_lcp:
                side, mid_lcp = _classify_mid(
                    index, pattern, mid, hi_lcp, rightmost, config, ledger, rng
                )
                if side < 0:
                    lo, lo_lcp = mid, mid_lcp
                else:
                    hi, hi_lcp = mid, mid_lcp
            else:
                lo, lo_lcp = mid, shared
        if trace is not None:
            trace.iterations += 1
            trace.lo_lcp_values.append(lo_lcp)
            trace.hi_lcp_values.append(hi_lcp)

    if rightmost:
        candidate, cand_lcp = lo, lo_lcp
    else:
        candidate, cand_lcp = hi, hi_lcp
    if cand_lcp == plen:
        return candidate
    # The loop can exit with the pattern sitting strictly between two
    # suffixes; confirm the candidate actually carries the pattern, resuming
    # past its verified prefix so the check stays cheap.
    suffix = index.suffix_view(candidate)
    resume = min(cand_lcp, min(len(suffix), plen)) + 1
    full = qlcp_from(suffix, pattern, resume, config, ledger, rng).lcp_len
    return candidate if full >= plen else None


def _classify_mid(
    index: TextIndex,
    pattern: bytes,
    mid: int,
    resume_lcp: int,
    rightmost: bool,
    config: CostModelConfig,
    ledger: QueryLedger,
    rng: random.Random | None,
) -> tuple[int, int]:
    """Compare the suffix at rank mid against the pattern, resuming after
    `resume_lcp` known-equal symbols.

    Returns (side, lcp) where side < 0 moves the low bracket up to mid and
    side > 0 moves the high bracket down to mid.
    """
    suffix = index.suffix_view(mid)
    mid_lcp = qlcp_from(suffix, pattern, resume_lcp + 1, config, ledger, rng).lcp_len
    if mid_lcp == len(pattern):
        # Full match: keep hunting in the direction of the wanted border.
        return (-1 if rightmost else 1), mid_lcp
    if mid_lcp == len(suffix):
        return -1, mid_lcp  # suffix is a proper prefix of the pattern: smaller
    ledger.charge_classical(2)
    if suffix[mid_lcp] > pattern[mid_lcp]:
        return 1, mid_lcp
    return -1, mid_lcp


def left_border_search(
    index: TextIndex,
    pattern: bytes,
    config: CostModelConfig | None = None,
    ledger: QueryLedger | None = None,
    rng: random.Random | None = None,
    trace: SearchTrace | None = None,
) -> int | None:
    """Smallest suffix-array rank whose suffix starts with `pattern`, or None."""
    config = config if config is not None else CostModelConfig()
    ledger = ledger if ledger is not None else QueryLedger()
    return _border_search(index, pattern, False, config, ledger, rng, trace)


def right_border_search(
    index: TextIndex,
    pattern: bytes,
    config: CostModelConfig | None = None,
    ledger: QueryLedger | None = None,
    rng: random.Random | None = None,
    trace: SearchTrace | None = None,
) -> int | None:
    """Largest suffix-array rank whose suffix starts with `pattern`, or None."""
    config = config if config is not None else CostModelConfig()
    ledger = ledger if ledger is not None else QueryLedger()
    return _border_search(index, pattern, True, config, ledger, rng, trace)


def expand_occurrences(index: TextIndex, left: int, right: int) -> list[int]:
    """Text positions of the suffixes at ranks left..right, sorted ascending."""
    if not (1 <= left <= right <= index.n):
        raise ValueError(f"invalid rank interval [{left}, {right}] for n={index.n}")
    return sorted(index.sa[left - 1 : right])


def match_all(
    text: bytes,
    dictionary: Dictionary,
    config: CostModelConfig | None = None,
    ledger: QueryLedger | None = None,
    traces: list[tuple[SearchTrace, SearchTrace]] | None = None,
) -> MatchReport:
    """Find all occurrences of every dictionary pattern in `text`.

    Builds the text index (charging classical reads), then runs both border
    searches per pattern and expands each non-empty rank interval into sorted
    text positions.  Pass `traces` to collect per-pattern search
    instrumentation.
    """
    config = config if config is not None else CostModelConfig()
    ledger = ledger if ledger is not None else QueryLedger()
    index = build_text_index(text, ledger)
    rng = random.Random(config.rng_seed)

    occurrences: list[list[int]] = []
    per_pattern: list[int] = []
    for pattern in dictionary.patterns:
        before = ledger.quantum_queries
        left_trace = SearchTrace() if traces is not None else None
        right_trace = SearchTrace() if traces is not None else None
        left = _border_search(index, pattern, False, config, ledger, rng, left_trace)
        right = _border_search(index, pattern, True, config, ledger, rng, right_trace)
        if traces is not None:
            traces.append((left_trace, right_trace))
        if left is None or right is None or left > right:
            # An inverted interval can only arise under error injection.
            occurrences.append([])
        else:
            occurrences.append(expand_occurrences(index, left, right))
        per_pattern.append(ledger.quantum_queries - before)

    return MatchReport(
        occurrences=occurrences,
        per_pattern_quantum_queries=per_pattern,
        ledger_snapshot=ledger.snapshot(),
    )
