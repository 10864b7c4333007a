"""Subgroups and cosets of (Z_n, +), the orbit subgroup and the subgroup chain.

Every subgroup of Z_n is dZ_n for a divisor d of n, so subgroups are stored
by that divisor and generated with gcd arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as K
from .core import BinaryDfa, StateSet
from .errors import ChainIncomplete, CosetNotInside, NotProperNonempty, NotSubgroupPair


@dataclass(frozen=True)
class Subgroup:
    n: int
    d: int

    def __post_init__(self):
        if self.d <= 0 or self.n % self.d:
            raise ValueError(f"{self.d} does not divide {self.n}")

    @classmethod
    def generated_by(cls, n: int, elements) -> Subgroup:
        g = n
        for x in elements:
            g = math.gcd(g, x % n)
        return cls(n, g)

    @property
    def order(self) -> int:
        return self.n // self.d

    @property
    def index(self) -> int:
        """n / |H|, which is also d."""
        return self.d

    @property
    def states(self) -> StateSet:
        return StateSet.of(self.n, range(0, self.n, self.d))

    def __le__(self, other: Subgroup) -> bool:
        return self.n == other.n and self.d % other.d == 0

    def __lt__(self, other: Subgroup) -> bool:
        return self <= other and self.d != other.d

    def cosets(self) -> list[Coset]:
        return [Coset(self, r) for r in range(self.d)]

    def __str__(self) -> str:
        if self.d == self.n:
            return "{0}"
        return "Z_%d" % self.n if self.d == 1 else f"{self.d}Z_{self.n}"


@dataclass(frozen=True)
class Coset:
    subgroup: Subgroup
    r: int

    def __post_init__(self):
        if not 0 <= self.r < self.subgroup.d:
            raise ValueError(f"residue {self.r} not in [0, {self.subgroup.d})")

    @classmethod
    def containing(cls, subgroup: Subgroup, q: int) -> Coset:
        return cls(subgroup, q % subgroup.d)

    @property
    def states(self) -> StateSet:
        return self.subgroup.states.shift(self.r)


@dataclass(frozen=True)
class SubgroupChain:
    levels: list[Subgroup]
    u_sets: list[StateSet]
    complete: bool
    # kernel views: divisors, subgroup masks and U masks per level
    divs: np.ndarray = field(repr=False, compare=False)
    hmasks: np.ndarray = field(repr=False, compare=False)
    umasks: np.ndarray = field(repr=False, compare=False)

    @property
    def ell(self) -> int:
        return len(self.levels) - 1

    @property
    def n(self) -> int:
        return self.levels[0].n


def orbit(dfa: BinaryDfa) -> StateSet:
    """The forward a-orbit {a^i(0) : i >= 1}."""
    seen = set()
    q = dfa.a_map[0]
    while q not in seen:
        seen.add(q)
        q = dfa.a_map[q]
    return StateSet.of(dfa.n, seen)


def orbit_subgroup(dfa: BinaryDfa) -> Subgroup:
    return Subgroup.generated_by(dfa.n, orbit(dfa))


def subgroup_chain(dfa: BinaryDfa) -> SubgroupChain:
    """H_0 = {0}, H_{i+1} = <H_i u a(H_i)>, until the subgroup stops growing."""
    n = dfa.n
    levels = [Subgroup(n, n)]
    u_sets = []
    while True:
        h = levels[-1]
        img = StateSet(n, dfa.a_image(h.states.mask))
        nxt = Subgroup.generated_by(n, list(img) + [h.d])
        if nxt == h:
            break
        u_sets.append(img - h.states)
        levels.append(nxt)
    complete = levels[-1].d == 1
    divs = np.array([h.d for h in levels], dtype=np.int64)
    hmasks = np.array([h.states.mask for h in levels], dtype=np.int64)
    umasks = np.array([u.mask for u in u_sets] + [0], dtype=np.int64)
    return SubgroupChain(levels, u_sets, complete, divs, hmasks, umasks)


def is_union_of_cosets(s: StateSet, h: Subgroup) -> bool:
    return s.shift(h.d) == s


def m_t(chain: SubgroupChain, s: StateSet) -> tuple[int, int]:
    """(m(S), t(S)): the first level meeting S properly, and the coarsest
    level whose cosets tile that intersection."""
    if s.mask == 0 or s.is_full():
        raise NotProperNonempty(f"{s} is empty or the whole state set")
    if not chain.complete:
        raise ChainIncomplete("subgroup chain does not reach Z_n")
    m = next(
        i for i, h in enumerate(chain.levels)
        if (h.states & s).mask not in (0, h.states.mask)
    )
    x = chain.levels[m].states & s
    t = max(i for i in range(m) if is_union_of_cosets(x, chain.levels[i]))
    return m, t


def coset_index(h: Subgroup, h_prime: Subgroup, c: Coset) -> int:
    """The least i with H + i = C; it is a multiple of n/|H'| and at most
    n/|H| - n/|H'|."""
    if not h <= h_prime:
        raise NotSubgroupPair(f"{h} is not contained in {h_prime}")
    if c.subgroup != h:
        raise ValueError("coset is not a coset of h")
    if c.r % h_prime.d:
        raise CosetNotInside(f"coset {c.states} is not inside {h_prime}")
    return c.r


def kernel_chain(dfa: BinaryDfa):
    """The jitted chain, for cross-checking :func:`subgroup_chain`."""
    return K.subgroup_chain(dfa.amap, dfa.n)
