"""Simulated quantum LCP primitive with explicit query accounting.

The primitive answers "where do two strings first differ?" the way a
Grover-style first-one search would, but classically: the answer is computed
by an ordinary scan while the *cost* is charged to a ledger according to the
square-root query rule of the search it stands in for.  A call that finds its
answer at position f charges ceil(alpha * sqrt(f)) simulated quantum queries
(the whole searched range when nothing is found).  An optional error mode
makes calls overshoot the first mismatch with a configurable probability, so
downstream algorithms can be stress-tested against bounded-error behaviour.

Nothing here touches amplitudes or circuits; query counts are the only
quantum-ness being modelled.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

__all__ = [
    "COST_MODES",
    "STOCHASTIC_SLACK",
    "QueryLedger",
    "CostModelConfig",
    "LcpResult",
    "first_one_search",
    "qlcp",
    "qlcp_from",
]

COST_MODES = ("deterministic", "stochastic")

# Hard cap on the extra queries the stochastic mode may add to one call.
STOCHASTIC_SLACK = 2


@dataclass
class QueryLedger:
    """Separated counters of classical symbol reads and simulated quantum queries.

    One ledger belongs to one algorithm run; counters only ever increase.
    """

    classical_reads: int = 0
    quantum_queries: int = 0

    def charge_classical(self, count: int = 1) -> None:
        if count < 0:
            raise ValueError("ledger charges must be non-negative")
        self.classical_reads += count

    def charge_quantum(self, count: int = 1) -> None:
        if count < 0:
            raise ValueError("ledger charges must be non-negative")
        self.quantum_queries += count

    def snapshot(self) -> "QueryLedger":
        return QueryLedger(self.classical_reads, self.quantum_queries)


@dataclass(frozen=True)
class CostModelConfig:
    """Knobs of the simulated cost model.

    alpha scales the square-root charge.  mode selects exact charging
    ("deterministic") or charging with bounded per-call jitter drawn from the
    exponential probing schedule ("stochastic").  error_p is the per-call
    probability that a search overshoots its true answer; 0 disables error
    injection, and values above 0.1 exceed the error budget the primitive is
    normally analysed under (allowed here for diagnostics only).  rng_seed
    seeds the generator used for jitter and error draws.
    """

    alpha: float = 1.0
    mode: str = "deterministic"
    error_p: float = 0.0
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if not self.alpha > 0:
            raise ValueError("alpha must be positive")
        if self.mode not in COST_MODES:
            raise ValueError(f"mode must be one of {COST_MODES}, got {self.mode!r}")
        if not 0.0 <= self.error_p <= 1.0:
            raise ValueError("error_p must lie in [0, 1]")


@dataclass(frozen=True)
class LcpResult:
    """LCP length reported by a simulated call plus the queries it charged."""

    lcp_len: int
    charged: int


def _charge(config: CostModelConfig, reach: int, rng: random.Random | None) -> int:
    """Queries charged for a search whose answer (or exhausted range) is `reach`.

    Deterministic mode charges exactly ceil(alpha * sqrt(reach)).  Stochastic
    mode walks the exponentially growing probe ranges 1, 2, 4, ... below
    `reach` and lets each failed probe add one extra bookkeeping query with
    probability 1/2, capped at STOCHASTIC_SLACK in total.
    """
    if reach <= 0:
        return 0
    total = math.ceil(config.alpha * math.sqrt(reach))
    if config.mode == "stochastic":
        assert rng is not None
        extra = 0
        span = 1
        while span < reach and extra < STOCHASTIC_SLACK:
            extra += rng.getrandbits(1)
            span <<= 1
        total += extra
    return total


def first_one_search(
    predicate: Callable[[int], bool],
    size: int,
    config: CostModelConfig | None = None,
    ledger: QueryLedger | None = None,
    rng: random.Random | None = None,
) -> int | None:
    """Return the smallest index in 1..size where `predicate` holds, or None.

    The result is computed by a plain scan; the ledger is charged what the
    quantum search would have paid.  Under error injection the call returns
    the *second* smallest satisfying index with probability error_p (None if
    the satisfying index is unique).  Pass `rng` to share one generator
    across calls; otherwise a fresh one is seeded from config.rng_seed.
    """
    if size < 0:
        raise ValueError("search domain size must be non-negative")
    config = config if config is not None else CostModelConfig()
    ledger = ledger if ledger is not None else QueryLedger()

    found = None
    for i in range(1, size + 1):
        if predicate(i):
            found = i
            break

    needs_rng = config.mode == "stochastic" or (config.error_p > 0 and found is not None)
    if needs_rng and rng is None:
        rng = random.Random(config.rng_seed)

    result = found
    if found is not None and config.error_p > 0 and rng.random() < config.error_p:
        result = None
        for i in range(found + 1, size + 1):
            if predicate(i):
                result = i
                break

    reach = result if result is not None else size
    ledger.charge_quantum(_charge(config, reach, rng))
    return result


def qlcp_from(
    u: Sequence,
    v: Sequence,
    start: int,
    config: CostModelConfig | None = None,
    ledger: QueryLedger | None = None,
    rng: random.Random | None = None,
) -> LcpResult:
    """Longest common prefix of u and v given that the first start-1 symbols match.

    Runs a first-one search for the mismatch position at or after `start`
    (symbol inequality, or exactly one sequence ending), so the charge scales
    with the distance from `start` to the mismatch rather than with the full
    prefix.  When the sequences agree through min(|u|, |v|) and have equal
    lengths there is no mismatch to find and the full remaining range is
    charged.  Returns the whole-string LCP length, not the distance searched.
    """
    shorter = min(len(u), len(v))
    if not 1 <= start <= shorter + 1:
        raise ValueError(f"start must lie in [1, {shorter + 1}], got {start}")
    ledger = ledger if ledger is not None else QueryLedger()
    base = start - 1
    # Lengths differing means "one sequence ran out" is itself a findable
    # mismatch one past the common range; equal lengths leave nothing there.
    size = shorter - base + (1 if len(u) != len(v) else 0)

    def mismatch(rel: int) -> bool:
        pos = base + rel - 1
        if pos < shorter:
            return u[pos] != v[pos]
        return True

    before = ledger.quantum_queries
    hit = first_one_search(mismatch, size, config, ledger, rng)
    lcp_len = base + hit - 1 if hit is not None else shorter
    return LcpResult(lcp_len=lcp_len, charged=ledger.quantum_queries - before)


def qlcp(
    u: Sequence,
    v: Sequence,
    config: CostModelConfig | None = None,
    ledger: QueryLedger | None = None,
    rng: random.Random | None = None,
) -> LcpResult:
    """Longest common prefix of u and v under the simulated query-cost model."""
    return qlcp_from(u, v, 1, config, ledger, rng)
