"""Power-set BFS: exact shortest reaching-word lengths for every subset."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .core import BinaryDfa, StateSet, Word
from .errors import TooLarge, Unreachable


@dataclass(frozen=True, eq=False)
class ReachTable:
    """BFS tree over subsets rooted at Q.

    ``dist[mask]`` is the shortest reaching-word length (-1 if unreachable);
    ``parent[mask]`` and ``letter[mask]`` (0 = a, 1 = b) give the BFS edge
    into mask, first discovery winning with a tried before b.
    """

    n: int
    dist: np.ndarray
    parent: np.ndarray
    letter: np.ndarray

    def distance(self, s: StateSet) -> int | None:
        d = int(self.dist[s.mask])
        return None if d < 0 else d

    def __contains__(self, s: StateSet) -> bool:
        return s.mask != 0 and self.dist[s.mask] >= 0

    def reachable_count(self) -> int:
        return int(np.count_nonzero(self.dist[1:] >= 0))

    def word_to(self, s: StateSet) -> Word:
        if s not in self:
            raise Unreachable(f"{s} is not reachable")
        out = []
        mask = s.mask
        while self.parent[mask] >= 0:
            out.append("ab"[self.letter[mask]])
            mask = int(self.parent[mask])
        return Word("".join(reversed(out)))

    def unreachable(self) -> list[StateSet]:
        masks = np.flatnonzero(self.dist < 0)
        return [StateSet(self.n, int(m)) for m in masks if m]


def reach_table(dfa: BinaryDfa, ceiling: int = K.MAX_BFS_N) -> ReachTable:
    if dfa.n > min(ceiling, K.MAX_BFS_N):
        raise TooLarge(f"n={dfa.n} exceeds the BFS ceiling {min(ceiling, K.MAX_BFS_N)}")
    dist, parent, letter = K.reach_bfs(dfa.amap, dfa.n)
    return ReachTable(dfa.n, dist, parent, letter)


def is_completely_reachable(dfa: BinaryDfa, table: ReachTable | None = None) -> bool:
    table = table or reach_table(dfa)
    return table.reachable_count() == (1 << dfa.n) - 1


def witnesses(dfa: BinaryDfa, table: ReachTable | None = None) -> list[StateSet]:
    """Unreachable subsets of maximum size; empty iff completely reachable."""
    table = table or reach_table(dfa)
    bad = table.unreachable()
    if not bad:
        return []
    top = max(len(s) for s in bad)
    return [s for s in bad if len(s) == top]
