"""Classical reference matchers: Aho-Corasick and a brute-force oracle.

The automaton is the usual goto-trie with failure links computed by BFS and
output lists propagated along them; matching is one left-to-right pass that
reads each text symbol once.  The brute-force matcher is definitionally
correct and exists to validate everything else.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .matcher import Dictionary, MatchReport
from .qlcp import QueryLedger

__all__ = [
    "AcAutomaton",
    "AcStats",
    "build_automaton",
    "ac_match",
    "brute_force_match",
]


@dataclass
class AcStats:
    """Transition counts observed during one matching pass."""

    transitions: int = 0


class AcAutomaton:
    """Aho-Corasick automaton over byte symbols.

    States are integers; state 0 is the root.  `outputs[s]` lists the indices
    of all patterns ending at state s, including those reached through
    failure links.  Immutable once built.
    """

    def __init__(self, dictionary: Dictionary):
        self.pattern_lengths = [len(p) for p in dictionary.patterns]
        self.goto: list[dict[int, int]] = [{}]
        self.fail: list[int] = [0]
        self.outputs: list[list[int]] = [[]]
        self.build_symbol_reads = 0
        self._build(dictionary)

    @property
    def node_count(self) -> int:
        return len(self.goto)

    def _build(self, dictionary: Dictionary) -> None:
        for j, pattern in enumerate(dictionary.patterns):
            state = 0
            for sym in pattern:
                self.build_symbol_reads += 1
                nxt = self.goto[state].get(sym)
                if nxt is None:
                    nxt = len(self.goto)
                    self.goto.append({})
                    self.fail.append(0)
                    self.outputs.append([])
                    self.goto[state][sym] = nxt
                state = nxt
            self.outputs[state].append(j)

        queue: deque[int] = deque()
        for child in self.goto[0].values():
            self.fail[child] = 0
            queue.append(child)
        while queue:
            state = queue.popleft()
            for sym, child in self.goto[state].items():
                queue.append(child)
                f = self.fail[state]
                while f and sym not in self.goto[f]:
                    f = self.fail[f]
                # goto targets of strictly shallower states can never be
                # `child` itself, so no self-loop check is needed.
                target = self.goto[f].get(sym, 0)
                self.fail[child] = target
                self.outputs[child].extend(self.outputs[target])


def build_automaton(dictionary: Dictionary) -> AcAutomaton:
    """Build the matching automaton; reads each pattern symbol once."""
    return AcAutomaton(dictionary)


def ac_match(
    automaton: AcAutomaton,
    text: bytes,
    ledger: QueryLedger | None = None,
    stats: AcStats | None = None,
) -> MatchReport:
    """All pattern occurrences in one pass over `text`.

    Occurrences are reported as 1-indexed start positions (the automaton sees
    matches at their end position; starts are recovered from the pattern
    lengths).  Charges one classical read per text symbol.
    """
    ledger = ledger if ledger is not None else QueryLedger()
    goto = automaton.goto
    fail = automaton.fail
    outputs = automaton.outputs
    lengths = automaton.pattern_lengths

    occurrences: list[list[int]] = [[] for _ in lengths]
    state = 0
    transitions = 0
    for end_pos, sym in enumerate(text, start=1):
        while state and sym not in goto[state]:
            state = fail[state]
            transitions += 1
        state = goto[state].get(sym, 0)
        transitions += 1
        for j in outputs[state]:
            occurrences[j].append(end_pos - lengths[j] + 1)

    ledger.charge_classical(len(text))
    if stats is not None:
        stats.transitions += transitions
    return MatchReport(
        occurrences=occurrences,
        per_pattern_quantum_queries=[0] * len(lengths),
        ledger_snapshot=ledger.snapshot(),
    )


def brute_force_match(text: bytes, dictionary: Dictionary) -> MatchReport:
    """Definitional matcher: every 1-indexed position where a pattern equals
    the text window starting there, overlaps included."""
    text = bytes(text)
    occurrences = []
    for pattern in dictionary.patterns:
        hits = []
        at = text.find(pattern)
        while at != -1:
            hits.append(at + 1)
            at = text.find(pattern, at + 1)
        occurrences.append(hits)
    return MatchReport(
        occurrences=occurrences,
        per_pattern_quantum_queries=[0] * dictionary.m,
        ledger_snapshot=QueryLedger(),
    )
