"""Reaching words: shortest ones from BFS, constructed ones with a length
guarantee, Pi-predecessors, expandability and the Don check."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _kernels as K
from .core import BinaryDfa, StateSet, Word, apply, excl_dupl, is_standardized, preimage
from .errors import (
    LemmaAFailure,
    NotCompletelyReachable,
    NotProperNonempty,
    OutOfRange,
)
from .orbit import SubgroupChain, m_t, subgroup_chain
from .reachability import ReachTable, is_completely_reachable, reach_table


@dataclass(frozen=True)
class ExpandStepResult:
    r: StateSet
    w: Word
    kind: Literal["grew", "descended"]
    m: int
    t: int


@dataclass(frozen=True)
class DonViolation:
    s: StateSet
    shortest_len: int
    bound: int


def shortest_reaching_word(table: ReachTable, s: StateSet) -> Word:
    if s.mask == 0:
        raise NotProperNonempty("the empty set has no reaching word")
    return table.word_to(s)


def pi_predecessors(dfa: BinaryDfa, s: StateSet) -> list[tuple[StateSet, Word]]:
    """Full preimages of s under each a b^i whose image is exactly s."""
    out = []
    for i in range(dfa.n):
        t = preimage(dfa, s, "b" * i)
        if 0 in t:
            continue
        out.append((preimage(dfa, t, "a"), Word("a" + "b" * i)))
    return out


def step_bound(chain: SubgroupChain, m: int, t: int) -> int:
    """n/|H_t| - n/|H_m| + 1."""
    return chain.levels[t].index - chain.levels[m].index + 1


def expand_step(dfa: BinaryDfa, chain: SubgroupChain, s: StateSet) -> ExpandStepResult:
    """One predecessor step: R = (a b^i)^-1(S) either grows or lowers m.

    Among the admissible coset pairs (C, u) the smallest coset index i wins,
    then the smallest u.
    """
    m, t = m_t(chain, s)
    r_mask, i, _, _ = K.expand_step(dfa.amap, dfa.n, chain.divs, chain.hmasks, chain.umasks, s.mask)
    if i < 0:
        raise LemmaAFailure(f"no coset pair for {s}; automaton is not standardized CR")
    r = StateSet(dfa.n, int(r_mask))
    w = Word("a" + "b" * int(i))
    if len(r) > len(s):
        kind = "grew"
    else:
        if not m_t(chain, r)[0] <= t:
            if not is_standardized(dfa):
                raise LemmaAFailure(f"{dfa.a_map} is not standardized; no valid step for {s}")
            raise RuntimeError(f"predecessor {r} of {s} neither grows nor descends")
        kind = "descended"
    return ExpandStepResult(r, w, kind, m, t)


def construction_steps(dfa: BinaryDfa, s: StateSet, chain: SubgroupChain | None = None) -> list[ExpandStepResult]:
    """Predecessor steps from s up to Q; the last step always grows to Q."""
    chain = chain or subgroup_chain(dfa)
    if not chain.complete:
        raise NotCompletelyReachable("subgroup chain stalls below Z_n")
    if s.mask == 0:
        raise NotProperNonempty("the empty set has no reaching word")
    steps = []
    cur = s
    last_m = math.inf
    while not cur.is_full():
        step = expand_step(dfa, chain, cur)
        if step.kind == "descended":
            m_r = m_t(chain, step.r)[0]
            if m_r >= last_m:
                raise RuntimeError(f"m did not decrease at {step.r}")
            last_m = m_r
        else:
            last_m = math.inf
        steps.append(step)
        cur = step.r
    return steps


def construct_reaching_word(dfa: BinaryDfa, s: StateSet, chain: SubgroupChain | None = None) -> Word:
    """A reaching word of length at most n(n - |s|) + n - 1.

    Each step prepends its a b^i block; the blocks read from Q downwards.
    """
    steps = construction_steps(dfa, s, chain)
    return Word("".join(step.w.letters for step in reversed(steps)))


def find_expanding_word(dfa: BinaryDfa, s: StateSet, max_len: int) -> Word | None:
    """A shortest word of length <= max_len that expands s, or None.

    Runs backwards from s. Before the collapsing letter every step must be
    injective on the current set, so the search follows b^-1 and a^-1 on
    sets that lie in im(a) and avoid dupl(a); it ends at the first set that
    lies in im(a) and meets dupl(a).
    """
    n = dfa.n
    if s.mask == 0 or s.is_full():
        raise NotProperNonempty(f"{s} is empty or the whole state set")
    excl, dupl = excl_dupl(dfa, "a")
    img = ((1 << n) - 1) & ~excl.mask
    full = (1 << n) - 1
    # node -> (child, letter) towards s
    parent: dict[int, tuple[int, str] | None] = {s.mask: None}
    frontier = deque([(s.mask, 0)])
    while frontier:
        p, depth = frontier.popleft()
        if depth + 1 > max_len:
            break
        if p & ~img == 0 and p & dupl.mask:
            letters = ["a"]
            node = p
            while parent[node] is not None:
                node, x = parent[node]
                letters.append(x)
            return Word("".join(letters))
        if depth + 2 > max_len:
            continue
        if p & ~img == 0:
            q = dfa.a_preimage(p)
            if q not in parent:
                parent[q] = (p, "a")
                frontier.append((q, depth + 1))
        q = ((p >> 1) | (p << (n - 1))) & full
        if q not in parent:
            parent[q] = (p, "b")
            frontier.append((q, depth + 1))
    return None


def expands(dfa: BinaryDfa, s: StateSet, word: Word | str) -> bool:
    """Whether some R with |R| > |s| maps onto s under word."""
    r = preimage(dfa, s, word)
    return len(r) > len(s) and apply(dfa, r, word) == s


def expansion_lengths(dfa: BinaryDfa) -> np.ndarray:
    """Shortest expanding-word length for every mask (-1: not expandable)."""
    return K.expansion_table(dfa.amap, dfa.n)


def don_check(dfa: BinaryDfa, table: ReachTable | None = None) -> list[DonViolation]:
    """Subsets whose shortest reaching word is longer than n(n - |S|)."""
    table = table or reach_table(dfa)
    if not is_completely_reachable(dfa, table):
        raise NotCompletelyReachable("Don check needs a completely reachable automaton")
    n = dfa.n
    masks = np.arange(1 << n, dtype=np.uint64)
    bound = n * (n - np.bitwise_count(masks).astype(np.int64))
    bad = np.flatnonzero(table.dist.astype(np.int64) > bound)
    return [DonViolation(StateSet(n, int(m)), int(table.dist[m]), int(bound[m])) for m in bad]


@dataclass(frozen=True)
class Bounds:
    don: int
    thm1: int
    fs: float
    std_transfer: int | None = None


def bounds_report(n: int, s: int, k: int | None = None) -> Bounds:
    """Length bounds for reaching an s-subset of an n-state automaton.

    don: conjectured n(n-s); thm1: n(n-s) + n - 1 for standardized CR
    automata; fs: 2(n-s)n - n ln(n-s) - n/(n-s), reported as 0 at s = n;
    std_transfer: thm1 + k(2n - s - 1) when a standardization shift k is
    given.
    """
    if not 0 < s <= n:
        raise OutOfRange(f"need 0 < s <= n, got s={s}, n={n}")
    if k is not None and not 0 <= k < n:
        raise OutOfRange(f"need 0 <= k < n, got k={k}")
    don = n * (n - s)
    thm1 = don + n - 1
    fs = 0.0 if s == n else 2 * (n - s) * n - n * math.log(n - s) - n / (n - s)
    std = None if k is None else thm1 + k * (2 * n - s - 1)
    return Bounds(don, thm1, fs, std)
