"""Circular binary automata over Z_n, subsets of states and words.

Letter b always acts as q -> q + 1 (mod n); only the action of a is stored.
Subsets are n-bit masks wrapped in :class:`StateSet`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import NotCircularNormalized, NotRankNMinus1, ParseError

MAX_N = 62


@dataclass(frozen=True)
class StateSet:
    n: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n={self.n} out of range")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has bits outside Z_{self.n}")

    @classmethod
    def of(cls, n: int, states: Iterable[int]) -> StateSet:
        mask = 0
        for q in states:
            if not 0 <= q < n:
                raise ValueError(f"state {q} not in Z_{n}")
            mask |= 1 << q
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> StateSet:
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> StateSet:
        return cls(n, 0)

    @classmethod
    def parse(cls, n: int, text: str) -> StateSet:
        """Parse ``"1,2,3"`` (braces optional, ``{}`` for the empty set)."""
        body = text.strip()
        offset = len(text) - len(text.lstrip())
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
            offset += 1
        states = []
        col = offset
        for part in body.split(",") if body.strip() else []:
            token = part.strip()
            start = col + len(part) - len(part.lstrip()) + 1
            if not token.isdigit():
                raise ParseError(f"expected a state number, got {token!r}", 1, start)
            q = int(token)
            if q >= n:
                raise ParseError(f"state {q} out of range for n={n}", 1, start)
            states.append(q)
            col += len(part) + 1
        return cls.of(n, states)

    def __iter__(self) -> Iterator[int]:
        return (q for q in range(self.n) if (self.mask >> q) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, q: int) -> bool:
        return 0 <= q < self.n and bool((self.mask >> q) & 1)

    def __or__(self, other: StateSet) -> StateSet:
        return StateSet(self.n, self.mask | other.mask)

    def __and__(self, other: StateSet) -> StateSet:
        return StateSet(self.n, self.mask & other.mask)

    def __sub__(self, other: StateSet) -> StateSet:
        return StateSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: StateSet) -> bool:
        return self.mask & ~other.mask == 0

    def complement(self) -> StateSet:
        return StateSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def shift(self, k: int) -> StateSet:
        """The set {q + k mod n : q in self}."""
        k %= self.n
        full = (1 << self.n) - 1
        return StateSet(self.n, ((self.mask << k) | (self.mask >> (self.n - k))) & full)

    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


_WORD_TOKEN = re.compile(r"\s*([ab])(\d*)")


@dataclass(frozen=True)
class Word:
    """A word over {a, b}, stored letter by letter."""

    letters: str = ""

    def __post_init__(self):
        bad = set(self.letters) - {"a", "b"}
        if bad:
            raise ValueError(f"letters outside {{a,b}}: {sorted(bad)}")

    @classmethod
    def parse(cls, text: str) -> Word:
        """Parse run-length text such as ``"a2 b5 a b5 a b3"`` or ``"aab"``."""
        stripped = text.strip()
        if stripped in ("", "e", "eps", "ε"):
            return cls("")
        pos = 0
        out = []
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _WORD_TOKEN.match(text, pos)
            if m is None:
                col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
                raise ParseError(f"expected 'a' or 'b', got {text[col - 1]!r}", 1, col)
            out.append(m.group(1) * (int(m.group(2)) if m.group(2) else 1))
            pos = m.end()
        return cls("".join(out))

    @classmethod
    def from_blocks(cls, exponents: Iterable[int], leading_b: int = 0) -> Word:
        """b^leading_b followed by a b^i for each i."""
        return cls("b" * leading_b + "".join("a" + "b" * i for i in exponents))

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def pi_blocks(self) -> list[int]:
        """Exponents i of the blocks a b^i, from the first a onwards."""
        start = self.letters.find("a")
        if start < 0:
            return []
        return [len(block) for block in self.letters[start + 1:].split("a")]

    def runs(self) -> list[tuple[str, int]]:
        return [(m.group(0)[0], len(m.group(0))) for m in re.finditer(r"a+|b+", self.letters)]

    def __str__(self) -> str:
        if not self.letters:
            return "ε"
        return " ".join(x if k == 1 else f"{x}{k}" for x, k in self.runs())


@dataclass(frozen=True)
class BinaryDfa:
    """Circular automaton on Z_n: ``a_map[q]`` is the image of q under a."""

    n: int
    a_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a_map", tuple(int(v) for v in self.a_map))
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n={self.n} out of range")
        if len(self.a_map) != self.n:
            raise ValueError(f"a_map has {len(self.a_map)} entries, expected {self.n}")
        if any(not 0 <= v < self.n for v in self.a_map):
            raise ValueError(f"a_map entries must lie in [0, {self.n})")

    @cached_property
    def amap(self) -> np.ndarray:
        """The a-map as an int64 array, for the kernels."""
        return np.array(self.a_map, dtype=np.int64)

    def a_image(self, mask: int) -> int:
        out = 0
        for q in range(self.n):
            if (mask >> q) & 1:
                out |= 1 << self.a_map[q]
        return out

    def a_preimage(self, mask: int) -> int:
        out = 0
        for q, v in enumerate(self.a_map):
            if (mask >> v) & 1:
                out |= 1 << q
        return out

    def __str__(self) -> str:
        return format_dfa(self)


def apply(dfa: BinaryDfa, s: StateSet, word: Word | str) -> StateSet:
    """Image of ``s`` under ``word``, letters read left to right."""
    letters = word.letters if isinstance(word, Word) else word
    mask = s.mask
    n = dfa.n
    full = (1 << n) - 1
    for x in letters:
        if x == "a":
            mask = dfa.a_image(mask)
        else:
            mask = ((mask << 1) | (mask >> (n - 1))) & full
    return StateSet(n, mask)


def preimage(dfa: BinaryDfa, s: StateSet, word: Word | str) -> StateSet:
    """The set {q : q.word in s}."""
    letters = word.letters if isinstance(word, Word) else word
    mask = s.mask
    n = dfa.n
    full = (1 << n) - 1
    for x in reversed(letters):
        if x == "a":
            mask = dfa.a_preimage(mask)
        else:
            mask = ((mask >> 1) | (mask << (n - 1))) & full
    return StateSet(n, mask)


def transformation(dfa: BinaryDfa, word: Word | str) -> tuple[int, ...]:
    letters = word.letters if isinstance(word, Word) else word
    img = list(range(dfa.n))
    for x in letters:
        if x == "a":
            img = [dfa.a_map[q] for q in img]
        else:
            img = [(q + 1) % dfa.n for q in img]
    return tuple(img)


def excl_dupl(dfa: BinaryDfa, word: Word | str) -> tuple[StateSet, StateSet]:
    """(states with no preimage, states with several preimages) under word."""
    counts = [0] * dfa.n
    for q in transformation(dfa, word):
        counts[q] += 1
    excl = StateSet.of(dfa.n, (q for q, c in enumerate(counts) if c == 0))
    dupl = StateSet.of(dfa.n, (q for q, c in enumerate(counts) if c > 1))
    return excl, dupl


def is_circular_normalized(dfa: BinaryDfa) -> bool:
    excl, dupl = excl_dupl(dfa, "a")
    return excl.mask == 1 and len(dupl) == 1


def is_standardized(dfa: BinaryDfa) -> bool:
    excl, dupl = excl_dupl(dfa, "a")
    return excl.mask == 1 and dupl.mask == 1 << dfa.a_map[0]


def conjugate(dfa: BinaryDfa, c: int) -> BinaryDfa:
    """Relabel every state q as q + c; the result is isomorphic to dfa."""
    n = dfa.n
    return BinaryDfa(n, tuple((dfa.a_map[(q - c) % n] + c) % n for q in range(n)))


def normalize_circular(dfa: BinaryDfa) -> BinaryDfa:
    """The rotation conjugate of dfa whose a excludes exactly state 0."""
    excl, _ = excl_dupl(dfa, "a")
    if len(excl) != 1:
        raise NotRankNMinus1(f"excl(a) = {excl} is not a singleton")
    (e,) = excl
    return conjugate(dfa, -e)


def standardization_shifts(dfa: BinaryDfa) -> list[int]:
    """The k for which a_k(q) = a(q + k) is standardized.

    These are the a-preimages of the duplicated state: the two states q_1,
    q_2 that the definition of a standardization refers to.
    """
    if not is_circular_normalized(dfa):
        raise NotCircularNormalized("standardization needs excl(a) = {0} and |dupl(a)| = 1")
    _, dupl = excl_dupl(dfa, "a")
    return [k for k in range(dfa.n) if dfa.a_map[k] in dupl]


def standardize(dfa: BinaryDfa) -> list[BinaryDfa]:
    """All automata with a replaced by b^k a that come out standardized."""
    n = dfa.n
    return [
        BinaryDfa(n, tuple(dfa.a_map[(q + k) % n] for q in range(n)))
        for k in standardization_shifts(dfa)
    ]


# ---------------------------------------------------------------------------
# text and DOT formats

_DFA_LINE = re.compile(r"^\s*n\s*=\s*(?P<n>\d+)\s*;\s*a\s*=\s*(?P<a>.*?)\s*$")


def format_dfa(dfa: BinaryDfa) -> str:
    return f"n={dfa.n}; a={','.join(map(str, dfa.a_map))}"


def parse_dfa(text: str, line: int = 1) -> BinaryDfa:
    """Parse ``n=<int>; a=<v0,...,v_{n-1}>``."""
    m = _DFA_LINE.match(text)
    if m is None:
        col = 1 + len(text) - len(text.lstrip())
        raise ParseError("expected 'n=<int>; a=<v0,v1,...>'", line, col)
    n = int(m.group("n"))
    if not 1 <= n <= MAX_N:
        raise ParseError(f"n={n} out of range", line, m.start("n") + 1)
    return BinaryDfa(n, parse_a_map(m.group("a"), n, line, m.start("a") + 1))


def parse_a_map(text: str, n: int | None = None, line: int = 1, column: int = 1) -> tuple[int, ...]:
    values = []
    col = column
    for part in text.split(","):
        token = part.strip()
        start = col + len(part) - len(part.lstrip())
        if not token.isdigit():
            raise ParseError(f"expected a state number, got {token!r}", line, start)
        values.append(int(token))
        col += len(part) + 1
    if n is None:
        n = len(values)
    if len(values) != n:
        raise ParseError(f"a-map has {len(values)} entries, expected {n}", line, column)
    col = column
    for part, v in zip(text.split(","), values):
        if v >= n:
            raise ParseError(f"image {v} out of range for n={n}", line, col + len(part) - len(part.lstrip()))
        col += len(part) + 1
    return tuple(values)


def parse_dfa_file(text: str) -> list[BinaryDfa]:
    """One automaton per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            out.append(parse_dfa(body, lineno))
    return out


def to_dot(dfa: BinaryDfa, letters: str = "ab", omit_fixed: bool = False, name: str = "A") -> str:
    """DOT text: solid edges for a, dashed edges for b.

    With ``omit_fixed`` the a-loops are dropped, and when b is not drawn the
    states fixed by a are left out entirely.
    """
    n = dfa.n
    fixed = {q for q in range(n) if dfa.a_map[q] == q}
    nodes = [q for q in range(n) if not (omit_fixed and "b" not in letters and q in fixed)]
    out = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    out += [f"  {q};" for q in nodes]
    if "a" in letters:
        for q in range(n):
            if omit_fixed and q in fixed:
                continue
            out.append(f'  {q} -> {dfa.a_map[q]} [label="a"];')
    if "b" in letters:
        for q in range(n):
            out.append(f'  {q} -> {(q + 1) % n} [label="b", style=dashed];')
    out.append("}")
    return "\n".join(out) + "\n"
